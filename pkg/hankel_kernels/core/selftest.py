"""
Built-in acceptance suite

Runs the worked examples and the seeded corpora through the same engines
a document would use and reports one VerificationReport per group.
"""
from typing import Callable, List

import numpy as np

from .coefficients import Polynomial, RationalFunction, Z
from .errors import HankelKernelError
from .hankel_kernel import HankelSymbol
from .polymat import RatMat, generic_rank
from .task_runner import TaskRunner
from . import worked_examples as examples
from ..utils.report_manager import VerificationReport

SECTION_DEPTH = 6


class SelfTest:
    """Acceptance groups over the worked-example corpus"""

    def __init__(self, runner: TaskRunner, logger=None):
        self.runner = runner
        self.logger = logger or runner.logger
        self.groups: List[tuple] = [
            ("double-zbar", "kernel", self.double_zbar),
            ("two-column-closed-form", "kernel", self.two_column_closed_forms),
            ("adjoint-round-trip", "kernel", self.adjoint_round_trip),
            ("scalar-pair", "kernel", self.scalar_pair),
            ("two-atom", "independency", self.two_atom),
            ("size-law", "independency", self.size_law),
            ("preservation", "preservation", self.preservation),
            ("lattice", "lcm", self.lattice),
            ("inner-outer-rank-two", "inner-outer", self.inner_outer),
            ("finite-sections", "kernel", self.finite_sections),
            ("iz-negative", "iz-check", self.iz_negative),
            ("backward-shift", "sstar", self.backward_shift),
            ("numeric-harness", "numeric", self.numeric_harness),
        ]

    def run(self) -> List[VerificationReport]:
        reports = []
        for task_id, op, group in self.groups:
            reports.append(self._guarded(task_id, op, group))
        return reports

    def _guarded(self, task_id: str, op: str, group: Callable) -> VerificationReport:
        report = VerificationReport(task_id, op)
        report.provenance["source"] = "built-in worked examples"
        self.logger(f"Self-test group {task_id}")
        try:
            group(report)
        except HankelKernelError as e:
            report.error = f"{type(e).__name__}: {e}"
            report.exit_code = e.exit_code
            self.logger(f"Self-test group {task_id} failed: {report.error}", 'ERROR')
        return report

    # -- groups -------------------------------------------------------------

    def _matches(self, computed, expected) -> bool:
        return self.runner.factorizer.equal_up_to_right_unitary(computed, expected) is not None

    def double_zbar(self, report):
        kernel = self.runner.kernels.kernel_rational(examples.double_zbar_symbol())
        report.exact["theta"] = kernel.theta.to_json()
        report.checks["kernel of [zbar, zbar] matches the 2x2 mixer"] = self._matches(
            kernel.theta, examples.double_zbar_kernel())
        self.runner.crosscheck(report, kernel.theta)

    def two_column_closed_forms(self, report):
        for k, (theta, first, second) in enumerate(examples.two_column_pairs()):
            symbol = RatMat.from_rows([[examples.conj(theta * first), examples.conj(theta * second)]])
            kernel = self.runner.kernels.kernel_rational(symbol)
            expected = examples.two_column_closed_form(theta, first, second)
            report.checks[f"pair {k + 1} matches diag(first, second) times the mixer"] = \
                self._matches(kernel.theta, expected)

    def adjoint_round_trip(self, report, count: int = 10, seed: int = 3):
        rng = np.random.default_rng(seed)
        for k in range(count):
            size, degree = int(rng.integers(1, 4)), int(rng.integers(1, 5))
            theta = examples.random_square_inner(rng, size, degree)
            kernel = self.runner.kernels.kernel_rational(theta.scaled_adjoint())
            report.checks[f"inner {k + 1} ({size}x{size}, degree {degree}) recovered"] = \
                self._matches(kernel.theta, theta)

    def scalar_pair(self, report):
        pair = examples.scalar_pair()
        engine = self.runner.independency
        for label, symbol, expected in (("Phi", pair.phi, pair.phi_kernel), ("Psi", pair.psi, pair.psi_kernel)):
            kernel = engine.kernel_symbolic(symbol)
            report.exact[f"{label} independency"] = kernel.independency
            report.checks[f"{label} has independency 1"] = kernel.independency == 1
            report.checks[f"{label} kernel as expected"] = self._matches(kernel.theta, expected)

    def two_atom(self, report):
        symbol = examples.two_atom_symbol()
        kernel = self.runner.independency.kernel_symbolic(symbol)
        report.exact["independency"] = kernel.independency
        report.checks["both atoms independent"] = kernel.independency == 2
        report.checks["kernel is trivial"] = kernel.theta.cols == 0

    def size_law(self, report):
        engine = self.runner.independency
        for k, (symbol, r) in enumerate(examples.independency_corpus()):
            kernel = engine.kernel_symbolic(symbol)
            report.checks[f"symbol {k + 1}: independency {r}"] = kernel.independency == r
            report.checks[f"symbol {k + 1}: {symbol.cols - r} kernel columns"] = \
                kernel.theta.cols == symbol.cols - r

    def preservation(self, report, count: int = 20, seed: int = 5):
        rng = np.random.default_rng(seed)
        engine = self.runner.independency
        corpus = examples.independency_corpus(seed=13, count=count)
        for k, (symbol, _) in enumerate(corpus):
            m, n = symbol.cols, symbol.rows
            if k % 3 == 0:
                result = engine.preservation_check(symbol, examples.random_ratmat(rng, m, m), 'right')
            elif k % 3 == 1:
                result = engine.preservation_check(symbol, examples.random_ratmat(rng, n, n), 'left')
            else:
                columns = max(m - 1, 1)
                result = engine.preservation_check(symbol, examples.random_ratmat(rng, m, columns), 'right')
            report.checks[f"pair {k + 1}: {result.relation} on the {result.side}"] = result.holds

    def lattice(self, report):
        example = examples.lattice_example()
        engine = self.runner.independency
        report.checks["Phi has independency 1"] = engine.independency(example.phi) == 1
        report.checks["Psi has independency 1"] = engine.independency(example.psi) == 1
        report.checks["stacked symbol has independency 2"] = engine.independency(example.omega) == 2
        report.checks["Phi kernel as expected"] = self._matches(
            engine.kernel_symbolic(example.phi).theta, example.theta1)
        report.checks["Psi kernel as expected"] = self._matches(
            engine.kernel_symbolic(example.psi).theta, example.theta2)
        lattice = self.runner.lattice
        lcm = lattice.lcm_inner([example.theta1, example.theta2], [example.phi, example.psi])
        report.checks["LCM is (0, 0, lcm of the scalar factors)"] = self._matches(lcm, example.lcm)
        report.checks["LCM audit"] = lattice.size_bound_audit(lattice.traces[-1]).passed
        gcd = lattice.gcd_inner([example.theta1, example.theta2])
        report.exact["gcd shape"] = [gcd.rows, gcd.cols]
        report.checks["GCD is 3x3"] = gcd.is_square and gcd.rows == 3
        report.checks["GCD audit"] = lattice.size_bound_audit(lattice.traces[-1]).passed

    def inner_outer(self, report):
        mat = examples.rank_two_matrix()
        result = self.runner.factorizer.inner_outer(mat)
        report.exact["generic_rank"] = generic_rank(mat)
        report.exact["shape"] = [result.theta.rows, result.theta.cols]
        report.checks["generic rank is 2"] = generic_rank(mat) == 2
        report.checks["inner factor is 3x2"] = (result.theta.rows, result.theta.cols) == (3, 2)
        report.checks["exact reassembly"] = result.reassembled() == mat
        self.runner.crosscheck(report, mat)
        self.runner.crosscheck(report, (mat, result))

    def finite_sections(self, report):
        engine = self.runner.kernels
        for label, mat in examples.rational_kernel_corpus():
            symbol = HankelSymbol(mat, self.runner.settings.disk_margin)
            kernel = engine.kernel_rational(symbol)
            agree = all(engine.finite_section_kernel_dim(symbol, d) == kernel.predicted_section_dim(d)
                        for d in range(SECTION_DEPTH + 1))
            report.checks[f"{label}: sections agree up to degree {SECTION_DEPTH}"] = agree

    def iz_negative(self, report):
        checks = self.runner.independency.iz_counterexample_check()
        report.exact["samples"] = len(checks)
        for k, check in enumerate(checks):
            report.checks[f"sample {k + 1}: defect {check.kernel_defect} vs {check.iz_defect}, strict"] = \
                check.passed

    def backward_shift(self, report):
        lattice = self.runner.lattice
        one = RationalFunction.constant(1)
        model = lattice.sstar_invariant_from_generators([RatMat.column([one, Z])])
        report.exact["(1, z) model dimension"] = model.dim
        report.checks["(1, z) generates a 2-dimensional model space"] = model.dim == 2
        single = lattice.sstar_invariant_from_generators([RatMat.column([one, one])])
        report.checks["(1, 1) reproduces the mixer kernel"] = self._matches(
            single.inner, examples.double_zbar_kernel())
        for k, vector in enumerate(examples.cyclic_corpus()):
            result = lattice.cyclic_test(vector)
            report.checks[f"rational vector {k + 1} is not cyclic"] = not result.cyclic and result.agree

    def numeric_harness(self, report):
        harness = self.runner.harness
        samples = harness.samples
        harness.samples = 256
        residual = harness.inner_residual(examples.double_zbar_kernel())
        harness.samples = samples
        report.exact["mixer identity residual"] = residual
        report.checks["mixer identity residual below 1e-10"] = residual < 1e-10
        ranks = harness.rank_profile(examples.rank_two_matrix())
        report.exact["svd ranks"] = ranks
        report.checks["svd rank is 2 at every point"] = all(r == 2 for r in ranks)
        geometric = RationalFunction(Polynomial.of(1), Polynomial.of(1) - Polynomial.monomial(1, "1/2"))
        self.runner.crosscheck(report, geometric)
