"""
Task execution

Runs the tasks of a symbol document in dependency order and turns every
outcome into a VerificationReport. Exceptions never escape a task: they
become the report's error and exit code.
"""
from typing import Any, Dict, List, Optional

from .circle_analysis import BlaschkeProduct
from .coefficients import Polynomial, RationalFunction
from .errors import DocumentError, HankelKernelError, InvariantViolation, PreconditionError
from .hankel_kernel import HankelKernelEngine, HankelSymbol
from .innerfact import InnerFactorizer, MatrixInner
from .nmod import IndependencyEngine, NSpanMatrix
from .polymat import RatMat, generic_rank
from .roots import set_working_precision
from .subspace_lattice import SubspaceLattice
from ..utils.config import VerifierSettings
from ..utils.document import SymbolDocument, TaskSpec
from ..utils.numeric_harness import NumericHarness
from ..utils.report_manager import VerificationReport


class TaskRunner:
    """Executes document tasks against the exact engines and the numeric harness"""

    def __init__(self, settings: Optional[VerifierSettings] = None, logger=None):
        """
        Initialize the runner

        Args:
            settings: Merged verifier settings (defaults when omitted)
            logger: Optional logging callable (message, level)
        """
        self.settings = settings or VerifierSettings()
        self.logger = logger or self._default_logger
        set_working_precision(self.settings.working_dps)
        self.factorizer = InnerFactorizer(self.settings.disk_margin, logger=self.logger)
        self.kernels = HankelKernelEngine(self.factorizer, self.settings.tolerance, logger=self.logger)
        self.independency = IndependencyEngine(self.factorizer, self.kernels, logger=self.logger)
        self.lattice = SubspaceLattice(self.factorizer, self.kernels, self.independency, logger=self.logger)
        self.harness = NumericHarness(self.settings.tolerance, self.settings.samples, self.settings.seed,
                                      self.settings.fft_size, self.settings.rank_points, logger=self.logger)
        self.results: Dict[str, Any] = {}

    @staticmethod
    def _default_logger(message, level='INFO'):
        print(f"[{level}] {message}")

    # -- document level -----------------------------------------------------

    def run(self, document: SymbolDocument, ops=None) -> List[VerificationReport]:
        """
        Execute the document's tasks in dependency order

        Args:
            document: Parsed symbol document
            ops: Optional set of operations to run (their dependencies run too)
        """
        tasks = document.tasks if ops is None else document.tasks_for(ops)
        self.results = {}
        reports: Dict[str, VerificationReport] = {}
        for task in tasks:
            failed = [d for d in task.depends if reports[d].error is not None]
            if failed:
                report = VerificationReport(task.id, task.op, error=f"dependency {failed[0]} failed",
                                            exit_code=reports[failed[0]].exit_code)
            else:
                report = self.run_task(task, document)
            reports[task.id] = report
        return list(reports.values())

    @staticmethod
    def exit_code(reports: List[VerificationReport]) -> int:
        """0 iff every report passed; otherwise the most severe code"""
        codes = [r.exit_code if r.error else (0 if r.passed else 4) for r in reports]
        return max(codes, default=0)

    def run_task(self, task: TaskSpec, document: SymbolDocument) -> VerificationReport:
        report = VerificationReport(task.id, task.op)
        handler = getattr(self, f"_op_{task.op.replace('-', '_')}")
        self.logger(f"Task {task.id}: {task.op}")
        try:
            handler(task, document, report)
        except HankelKernelError as e:
            report.error = f"{type(e).__name__}: {e}"
            report.exit_code = e.exit_code
            self.logger(f"Task {task.id} failed: {report.error}", 'ERROR')
        except Exception as e:
            report.error = f"{type(e).__name__}: {e}"
            report.exit_code = InvariantViolation.exit_code
            self.logger(f"Task {task.id} raised an unexpected {report.error}", 'ERROR')
        else:
            level = 'SUCCESS' if report.passed else 'ERROR'
            self.logger(f"Task {task.id} {'passed' if report.passed else 'failed'}", level)
        return report

    # -- resolution ---------------------------------------------------------

    def _value(self, name, document: SymbolDocument):
        if not isinstance(name, str) or not name.startswith("$"):
            raise DocumentError(f"expected a $reference, got {name!r}")
        key = name[1:]
        if key in self.results:
            return self.results[key]
        return document.resolve(name)

    @staticmethod
    def _source(name: str, document: SymbolDocument) -> str:
        key = name[1:]
        return f"object {key}" if key in document.objects else f"task {key}"

    def _param(self, task: TaskSpec, key: str):
        if key not in task.params:
            raise DocumentError(f"task '{task.id}' ({task.op}) needs '{key}'")
        return task.params[key]

    @staticmethod
    def _same_height(task: TaskSpec, values: List, what: str) -> List:
        heights = sorted({v.rows for v in values})
        if len(heights) > 1:
            raise DocumentError(f"task '{task.id}' ({task.op}): {what} have heights {heights}")
        return values

    def _inner(self, name, document) -> MatrixInner:
        value = self._value(name, document)
        if not isinstance(value, MatrixInner):
            raise DocumentError(f"{name} is not an inner function")
        return value

    def _matrix(self, name, document) -> RatMat:
        value = self._value(name, document)
        if isinstance(value, RatMat):
            return value
        if isinstance(value, MatrixInner):
            return value.mat
        if isinstance(value, Polynomial):
            return RatMat.from_rows([[RationalFunction(value)]])
        if isinstance(value, BlaschkeProduct):
            return RatMat.from_rows([[value.as_rational()]])
        if isinstance(value, RationalFunction):
            return RatMat.from_rows([[value]])
        if isinstance(value, NSpanMatrix) and not value.atoms():
            return value.rational_part()
        raise DocumentError(f"{name} is not a rational matrix")

    def _symbol(self, name, document) -> NSpanMatrix:
        value = self._value(name, document)
        if isinstance(value, NSpanMatrix):
            return value
        return NSpanMatrix.from_ratmat(self._matrix(name, document))

    def _compare(self, report: VerificationReport, computed: MatrixInner, task: TaskSpec,
                 document: SymbolDocument, label: str):
        expected_name = task.params.get("expect")
        if expected_name is None:
            return
        expected = self._inner(expected_name, document)
        match = self.factorizer.equal_up_to_right_unitary(computed, expected)
        report.checks[f"{label} matches {expected_name[1:]} up to right unitary"] = match is not None
        report.provenance[f"expected {label}"] = self._source(expected_name, document)
        if match is not None and match.unitary is not None:
            report.exact["right unitary at z=1 (numeric)"] = [[str(complex(v)) for v in row] for row in match.unitary]

    def crosscheck(self, report: VerificationReport, obj):
        summary = self.harness.numeric_crosscheck(obj)
        report.numeric.append(summary.to_json())

    # -- operations ---------------------------------------------------------

    def _op_kernel(self, task, document, report):
        symbol = self._symbol(self._param(task, "symbol"), document)
        report.provenance["symbol"] = self._source(task.params["symbol"], document)
        if symbol.atoms():
            kernel = self.independency.kernel_symbolic(symbol)
            theta = kernel.theta
            report.exact["independency"] = kernel.independency
            report.checks["columns = width - independency"] = theta.cols == symbol.cols - kernel.independency
            report.provenance["theta"] = "kernel_symbolic"
        else:
            hankel = HankelSymbol(symbol.rational_part(), self.settings.disk_margin)
            kernel = self.kernels.kernel_rational(hankel)
            theta = kernel.theta
            report.exact["defect_dim"] = kernel.defect_dim
            report.exact["column_degrees"] = list(kernel.column_degrees)
            report.provenance["theta"] = "kernel_rational"
            report.checks["columns lie in the kernel"] = all(
                self.kernels.kernel_membership(hankel, theta.mat.select_columns([j]))
                for j in range(theta.cols))
            depth = int(task.params.get("section_depth", self.settings.section_depth))
            sections = {d: self.kernels.finite_section_kernel_dim(hankel, d) for d in range(depth + 1)}
            report.exact["finite_section_dims"] = sections
            report.checks[f"finite sections agree up to degree {depth}"] = all(
                value == kernel.predicted_section_dim(d) for d, value in sections.items())
            report.checks["H S = S* H on monomials"] = self.kernels.intertwine_check(hankel, 3)
        report.exact["theta"] = theta.to_json()
        report.exact["shape"] = [theta.rows, theta.cols]
        if theta.cols:
            report.checks["inner certificate"] = bool(self.factorizer.certify(theta))
            self.crosscheck(report, theta)
        self._compare(report, theta, task, document, "kernel")
        self.results[task.id] = theta

    def _op_independency(self, task, document, report):
        symbol = self._symbol(self._param(task, "symbol"), document)
        value = self.independency.independency(symbol)
        subset = self.independency.maximal_independent_subset(symbol)
        report.exact["independency"] = value
        report.exact["maximal_independent_subset"] = subset
        report.checks["subset size equals independency"] = len(subset) == value
        kernel = self.independency.kernel_symbolic(symbol)
        report.exact["kernel_columns"] = kernel.theta.cols
        report.checks["kernel columns = width - independency"] = kernel.theta.cols == symbol.cols - value
        if "expect" in task.params:
            report.checks["independency as expected"] = value == int(task.params["expect"])
        self.results[task.id] = kernel.theta

    def _lattice_result(self, task, document, report, theta, trace):
        report.exact["theta"] = theta.to_json()
        report.exact["shape"] = [theta.rows, theta.cols]
        report.exact["route"] = trace.path
        if trace.stacked_independency is not None:
            report.exact["stacked_independency"] = trace.stacked_independency
            report.checks["symbol and module routes agree"] = trace.cross_checked
        if theta.cols:
            report.checks["inner certificate"] = bool(self.factorizer.certify(theta))
            self.crosscheck(report, theta)
        if "expect_cols" in task.params:
            report.checks["column count as expected"] = theta.cols == int(task.params["expect_cols"])
        self._compare(report, theta, task, document, task.op)
        self.results[task.id] = theta
        self.results[f"{task.id}.trace"] = trace

    def _op_gcd(self, task, document, report):
        inputs = self._same_height(
            task, [self._inner(name, document) for name in self._param(task, "inputs")], "inputs")
        theta = self.lattice.gcd_inner(inputs)
        self._lattice_result(task, document, report, theta, self.lattice.traces[-1])

    def _op_lcm(self, task, document, report):
        inputs = self._same_height(
            task, [self._inner(name, document) for name in self._param(task, "inputs")], "inputs")
        symbols = task.params.get("symbols")
        if symbols is not None:
            symbols = [self._symbol(name, document) for name in symbols]
        theta = self.lattice.lcm_inner(inputs, symbols)
        self._lattice_result(task, document, report, theta, self.lattice.traces[-1])

    def _op_audit(self, task, document, report):
        source = self._param(task, "task")
        trace = self.results.get(f"{source}.trace")
        if trace is None:
            raise PreconditionError(f"task {source} is not a gcd or lcm task")
        audit = self.lattice.size_bound_audit(trace)
        report.exact["bounds"] = [audit.lower, audit.upper]
        report.exact["result_cols"] = trace.result_cols
        report.exact["notes"] = audit.notes
        report.exact["table"] = audit.to_frame().to_dict(orient="records")
        report.checks["size within lattice bounds"] = audit.passed

    def _op_inner_outer(self, task, document, report):
        mat = self._matrix(self._param(task, "matrix"), document)
        result = self.factorizer.inner_outer(mat)
        rank = generic_rank(mat)
        report.exact["generic_rank"] = rank
        report.exact["shape"] = [result.theta.rows, result.theta.cols]
        report.exact["theta"] = result.theta.to_json()
        report.exact["outer"] = result.outer.scaled.to_json()
        report.exact["peels"] = len(result.factors)
        report.checks["exact reassembly"] = result.reassembled() == mat
        report.checks["inner columns = generic rank"] = result.theta.cols == rank
        report.checks["inner certificate"] = bool(self.factorizer.certify(result.theta))
        if "expect_rank" in task.params:
            report.checks["rank as expected"] = rank == int(task.params["expect_rank"])
        self.crosscheck(report, mat)
        self.crosscheck(report, (mat, result))
        self._compare(report, result.theta, task, document, "inner factor")
        self.results[task.id] = result.theta

    def _op_sstar(self, task, document, report):
        generators = self._same_height(
            task, [self._matrix(name, document) for name in self._param(task, "generators")], "generators")
        model = self.lattice.sstar_invariant_from_generators(generators)
        report.exact["model_dim"] = model.dim
        report.exact["theta"] = model.inner.to_json()
        if "expect_dim" in task.params:
            report.checks["dimension as expected"] = model.dim == int(task.params["expect_dim"])
        orthogonality = self.harness.model_space_orthogonality(generators, model.inner)
        report.numeric.append({"kind": "orthogonality", "residuals": {"max inner product": orthogonality},
                               "tolerance": self.settings.tolerance,
                               "passed": orthogonality <= self.settings.tolerance})
        self._compare(report, model.inner, task, document, "kernel")
        self.results[task.id] = model.inner

    def _op_cyclic(self, task, document, report):
        vector = self._matrix(self._param(task, "vector"), document)
        result = self.lattice.cyclic_test(vector)
        report.exact["cyclic"] = result.cyclic
        report.exact["model_dim"] = result.model_dim
        report.exact["conjugate_independency"] = result.independency
        report.checks["model space and independency criteria agree"] = result.agree
        if "expect" in task.params:
            report.checks["cyclicity as expected"] = result.cyclic == bool(task.params["expect"])

    def _op_preservation(self, task, document, report):
        symbol = self._symbol(self._param(task, "symbol"), document)
        multiplier = self._matrix(self._param(task, "multiplier"), document)
        side = task.params.get("side", "right")
        result = self.independency.preservation_check(symbol, multiplier, side)
        report.exact.update({"side": side, "before": result.before, "after": result.after,
                             "relation": result.relation, "bounds": [result.lower, result.upper]})
        report.checks[f"{result.relation} relation holds"] = result.holds

    def _op_iz_check(self, task, document, report):
        samples = task.params.get("samples")
        checks = self.independency.iz_counterexample_check(samples)
        report.exact["samples"] = [{"alphas": list(c.alphas), "offsets": list(c.offsets),
                                    "kernel_defect": c.kernel_defect, "iz_defect": c.iz_defect}
                                   for c in checks]
        report.checks["kernel strictly contains z H^2 (+) z H^2"] = bool(checks) and all(c.passed for c in checks)
