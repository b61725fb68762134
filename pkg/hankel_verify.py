"""
Hankel Kernels - command-line verifier

Runs the tasks of a symbol document (or the built-in self-test) and
prints a verification report. Exit codes: 0 all tasks pass, 2 document
error, 3 input outside the supported class, 4 failed check or internal
invariant violation.

Usage:
    python hankel_verify.py run documents/double_zbar.json
    python hankel_verify.py kernel documents/double_zbar.json --format json
    python hankel_verify.py selftest --verbose
"""
import argparse
import sys
from pathlib import Path

from hankel_kernels.core.errors import DocumentError, HankelKernelError
from hankel_kernels.core.selftest import SelfTest
from hankel_kernels.core.task_runner import TaskRunner
from hankel_kernels.utils.config import ConfigManager
from hankel_kernels.utils.document import DocumentLoader
from hankel_kernels.utils.report_manager import ReportManager

# subcommand -> task operations it selects from the document
OPERATION_COMMANDS = {
    "kernel": {"kernel"},
    "independency": {"independency"},
    "gcd": {"gcd"},
    "lcm": {"lcm"},
    "inner-outer": {"inner-outer"},
    "sstar": {"sstar"},
    "cyclic": {"cyclic"},
    "audit": {"audit"},
    "preservation": {"preservation"},
    "iz-check": {"iz-check"},
}


class StderrLogger:
    """Writes [LEVEL] lines to stderr so reports on stdout stay clean"""

    QUIET_LEVELS = ('DEBUG', 'INFO')

    def __init__(self, verbose: bool = False):
        self.verbose = verbose

    def __call__(self, message, level='INFO'):
        if level in self.QUIET_LEVELS and not self.verbose:
            return
        print(f"[{level}] {message}", file=sys.stderr)


def parse_args(argv=None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=None,
                        help="Numeric residual and SVD rank threshold (default: 1e-8)")
    common.add_argument("--samples", type=int, default=None,
                        help="Circle sample points for numeric cross-checks (default: 64)")
    common.add_argument("--seed", type=int, default=None,
                        help="Seed for the circle sample points (default: 0)")
    common.add_argument("--strict", action="store_true",
                        help="Reject bare JSON floats in documents")
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="Report format on stdout")
    common.add_argument("--output-dir", type=Path, default=None,
                        help="Also save the report under this folder")
    common.add_argument("--config", type=Path, default=None,
                        help="Configuration file (default: ./hankel_kernels_config.json)")
    common.add_argument("--verbose", "-v", action="store_true",
                        help="Log engine progress to stderr")

    parser = argparse.ArgumentParser(
        description="Exact block Hankel kernels, inner functions and independency checks.")
    commands = parser.add_subparsers(dest="command", required=True)
    run = commands.add_parser("run", parents=[common], help="Run every task of a document")
    run.add_argument("document", type=Path, help="Symbol document (JSON)")
    for name in OPERATION_COMMANDS:
        sub = commands.add_parser(name, parents=[common], help=f"Run the document's {name} tasks")
        sub.add_argument("document", type=Path, help="Symbol document (JSON)")
    commands.add_parser("selftest", parents=[common], help="Run the built-in worked examples")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    logger = StderrLogger(args.verbose)
    config = ConfigManager(args.config, logger=logger)
    try:
        settings = config.settings(tolerance=args.tolerance, samples=args.samples, seed=args.seed)
    except ValueError as e:
        logger(f"Invalid setting: {e}", 'ERROR')
        return DocumentError.exit_code
    runner = TaskRunner(settings, logger=logger)

    if args.command == "selftest":
        name, title = "selftest", "SELF-TEST"
        reports = SelfTest(runner).run()
    else:
        try:
            document = DocumentLoader(strict=args.strict, logger=logger).load(args.document)
        except HankelKernelError as e:
            logger(str(e), 'ERROR')
            return e.exit_code
        name, title = args.document.stem, f"VERIFICATION REPORT: {args.document.name}"
        reports = runner.run(document, OPERATION_COMMANDS.get(args.command))

    manager = ReportManager(args.output_dir or settings.reports_dir, logger=logger)
    if args.format == "json":
        sys.stdout.write(manager.render_json(reports))
    else:
        sys.stdout.write(manager.render_text(reports, title))
    if args.output_dir is not None:
        manager.save_reports(name, reports, args.format)
    return runner.exit_code(reports)


if __name__ == "__main__":
    sys.exit(main())
