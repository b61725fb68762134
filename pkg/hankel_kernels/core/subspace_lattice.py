"""
Lattice of shift-invariant subspaces

Join (GCD) and intersection (LCM) of ranges of matrix inner functions,
subspaces generated by finitely many vectors under the shift or the
backward shift, cyclic-vector tests and the size-bound audit.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from .coefficients import Polynomial, RationalFunction
from .errors import DomainRejection, InvariantViolation
from .hankel_kernel import HankelKernelEngine, HankelSymbol
from .innerfact import InnerFactorizer, MatrixInner
from .nmod import AtomFactory, IndependencyEngine, NSpanMatrix
from .polymat import RatMat, generic_rank, hermite_kernel_basis


@dataclass(frozen=True, eq=False)
class ShiftInvariantSubspace:
    """Theta H^2 together with how it was obtained"""

    inner: MatrixInner
    provenance: Tuple[str, ...] = ()


@dataclass(frozen=True, eq=False)
class ModelSubspace:
    """H^2 minus Theta H^2; dim is None when Theta is not square"""

    inner: MatrixInner
    dim: Optional[int]


@dataclass
class LatticeTrace:
    """Sizes recorded by gcd_inner/lcm_inner for the audit"""

    operation: str
    rows: int
    input_cols: List[int]
    result_cols: int
    path: str = ""
    stacked_independency: Optional[int] = None
    cross_checked: bool = False


@dataclass
class AuditReport:
    trace: LatticeTrace
    lower: int
    upper: int
    first_size_variant_lower: Optional[int] = None
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.lower <= self.trace.result_cols <= self.upper

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([{
            "operation": self.trace.operation,
            "rows": self.trace.rows,
            "input columns": ",".join(str(c) for c in self.trace.input_cols),
            "result columns": self.trace.result_cols,
            "lower bound": self.lower,
            "upper bound": self.upper,
            "within bounds": self.passed,
        }])


@dataclass(frozen=True)
class CyclicReport:
    cyclic: bool
    model_dim: Optional[int]
    independency: int
    agree: bool


class SubspaceLattice:
    """GCD/LCM of inner functions and finitely generated invariant subspaces"""

    def __init__(self, factorizer: Optional[InnerFactorizer] = None,
                 kernel_engine: Optional[HankelKernelEngine] = None,
                 independency_engine: Optional[IndependencyEngine] = None, logger=None):
        self.logger = logger or self._default_logger
        self.factorizer = factorizer or InnerFactorizer(logger=self.logger)
        self.kernel_engine = kernel_engine or HankelKernelEngine(self.factorizer, logger=self.logger)
        self.independency_engine = independency_engine or IndependencyEngine(
            self.factorizer, self.kernel_engine, logger=self.logger)
        self.traces: List[LatticeTrace] = []

    @staticmethod
    def _default_logger(message: str, level: str = 'INFO'):
        print(f"[{level}] {message}")

    # -- helpers ------------------------------------------------------------

    def quotient(self, theta: MatrixInner, vectors: RatMat) -> Optional[RatMat]:
        """Analytic A with vectors = N_theta A, or None when there is none"""
        candidate = theta.scaled_adjoint() @ vectors
        if not self.factorizer.is_analytic(candidate):
            return None
        if theta.mat @ candidate != vectors:
            return None
        return candidate

    def contains(self, theta: MatrixInner, vectors: RatMat) -> bool:
        """Every column of vectors lies in theta H^2"""
        return self.quotient(theta, vectors) is not None

    def _check_rows(self, thetas: Sequence[MatrixInner]) -> int:
        if not thetas:
            raise DomainRejection("at least one inner function is required")
        rows = thetas[0].rows
        if any(t.rows != rows for t in thetas):
            raise DomainRejection("inner functions have different row counts")
        return rows

    # -- generated subspaces ------------------------------------------------

    def shift_invariant_from_generators(self, generators: Sequence[RatMat]) -> ShiftInvariantSubspace:
        """
        Smallest shift-invariant subspace containing the generators

        Raises:
            DomainRejection: If there are no generators or all are zero
        """
        if not generators:
            raise DomainRejection("no generators given")
        stacked = RatMat.hstack(list(generators))
        if stacked.is_zero:
            raise DomainRejection("all generators are zero")
        theta = self.factorizer.inner_outer(stacked).theta
        if self.quotient(theta, stacked) is None:
            raise InvariantViolation("a generator does not factor through the inner function")
        return ShiftInvariantSubspace(theta, ("generators",))

    def sstar_invariant_from_generators(self, generators: Sequence[RatMat]) -> ModelSubspace:
        """
        Smallest backward-shift-invariant subspace containing the generators

        It is the orthogonal complement of ker H_(zbar F*).
        """
        if not generators:
            raise DomainRejection("no generators given")
        stacked = RatMat.hstack(list(generators))
        inverse_z = RationalFunction(Polynomial.of(1), Polynomial.monomial(1))
        symbol = HankelSymbol(stacked.adjoint() * inverse_z)
        kernel = self.kernel_engine.kernel_rational(symbol)
        dim = kernel.defect_dim if kernel.theta.is_square else None
        self.logger(f"Backward-shift subspace has dimension {dim}", 'SUCCESS')
        return ModelSubspace(kernel.theta, dim)

    def cyclic_test(self, vector: RatMat) -> CyclicReport:
        """
        Is the vector cyclic for the backward shift

        Computed twice: from the model space (finite dimension means not
        cyclic) and from the independency of the conjugate coordinates.
        """
        model = self.sstar_invariant_from_generators([vector])
        model_cyclic = model.dim is None
        conjugates = NSpanMatrix.from_ratmat(vector.adjoint())
        independency = self.independency_engine.independency(conjugates)
        symbolic_cyclic = independency == vector.rows
        return CyclicReport(model_cyclic and symbolic_cyclic, model.dim, independency,
                            model_cyclic == symbolic_cyclic)

    def cyclic_test_symbolic(self, conjugates: NSpanMatrix) -> bool:
        """Cyclicity from the 1 x n symbol of conjugate coordinates alone"""
        return self.independency_engine.independency(conjugates) == conjugates.cols

    # -- join and intersection ----------------------------------------------

    def gcd_inner(self, thetas: Sequence[MatrixInner]) -> MatrixInner:
        """Inner function of the closed span of the ranges"""
        rows = self._check_rows(thetas)
        stacked = RatMat.hstack([t.mat for t in thetas])
        result = self.factorizer.canonical_form(self.factorizer.inner_outer(stacked).theta)
        for theta in thetas:
            if self.quotient(result, theta.mat) is None:
                raise InvariantViolation("an input is not a left multiple of the GCD")
        trace = LatticeTrace("gcd", rows, [t.cols for t in thetas], result.cols, "inner-outer")
        self._record(trace)
        return result

    def _intersect_pair(self, first: MatrixInner, second: MatrixInner) -> MatrixInner:
        """Range intersection through the kernel of [N_1, -N_2]"""
        joined = RatMat.hstack([first.mat, -second.mat])
        if generic_rank(joined) == joined.cols:
            return MatrixInner.empty(first.rows)
        basis = hermite_kernel_basis(joined)
        frame = self.factorizer.saturated_frame(basis.to_ratmat())
        top = frame.mat.submatrix(range(first.cols), range(frame.cols))
        image = first.mat @ top
        if image.is_zero:
            return MatrixInner.empty(first.rows)
        return self.factorizer.inner_outer(image).theta

    def _symbols(self, thetas, symbols) -> Optional[List[NSpanMatrix]]:
        if symbols is not None:
            return list(symbols)
        out = []
        for index, theta in enumerate(thetas):
            if not (theta.is_square or theta.cols == 1):
                return None
            factory = AtomFactory(namespace=f"lcm{index + 1}.")
            out.append(self.independency_engine.symbol_for_inner(theta, factory))
        return out

    def lcm_inner(self, thetas: Sequence[MatrixInner],
                  symbols: Sequence[NSpanMatrix] = None) -> MatrixInner:
        """
        Inner function of the intersection of the ranges

        Args:
            thetas: Inner functions with a common row count
            symbols: Optional symbols whose kernels are the thetas' ranges;
                built with symbol_for_inner when omitted and possible

        The Hankel-symbol route is used when symbols are available and the
        module intersection route always runs; when both run they must agree.
        """
        rows = self._check_rows(thetas)
        intersection = thetas[0]
        for theta in thetas[1:]:
            intersection = self._intersect_pair(intersection, theta)
            if intersection.cols == 0:
                break
        path = "module-intersection"
        stacked_independency = None
        cross_checked = False
        symbol_list = self._symbols(thetas, symbols)
        result = intersection
        if symbol_list is not None:
            kernel = self.independency_engine.kernel_symbolic(NSpanMatrix.vstack(symbol_list))
            stacked_independency = kernel.independency
            if self.factorizer.equal_up_to_right_unitary(kernel.theta, intersection) is None:
                raise InvariantViolation("symbol route and module route disagree on the LCM")
            result = kernel.theta
            path = "hankel-symbol"
            cross_checked = True
        result = self.factorizer.canonical_form(result)
        for theta in thetas:
            if result.cols and self.quotient(theta, result.mat) is None:
                raise InvariantViolation("LCM range is not contained in an input range")
        trace = LatticeTrace("lcm", rows, [t.cols for t in thetas], result.cols, path,
                             stacked_independency, cross_checked)
        self._record(trace)
        return result

    def _record(self, trace: LatticeTrace):
        self.traces.append(trace)
        self.logger(f"{trace.operation.upper()} of sizes {trace.input_cols} has "
                    f"{trace.result_cols} columns ({trace.path})", 'SUCCESS')

    # -- audit --------------------------------------------------------------

    def size_bound_audit(self, trace: LatticeTrace) -> AuditReport:
        """
        Check the result size against the lattice bounds

        GCD: max m_i <= l <= min(n, sum m_i).
        LCM: n - sum (n - m_i) <= l <= min m_i; the variant with m_1 in every
        term of the sum is reported next to it.

        Raises:
            InvariantViolation: If the size is outside the bounds
        """
        n, sizes = trace.rows, trace.input_cols
        notes = []
        variant = None
        if trace.operation == "gcd":
            lower, upper = max(sizes), min(n, sum(sizes))
        elif trace.operation == "lcm":
            lower = max(0, n - sum(n - m for m in sizes))
            upper = min(sizes)
            variant = max(0, n - len(sizes) * (n - sizes[0]))
            if variant != lower:
                notes.append(f"lower bound with m_1 in every term would be {variant}; "
                             f"the per-input bound {lower} is used")
        else:
            raise ValueError(f"unknown lattice operation {trace.operation}")
        if trace.stacked_independency is not None:
            notes.append(f"stacked symbol independency: {trace.stacked_independency}")
        report = AuditReport(trace, lower, upper, variant, notes)
        if not report.passed:
            raise InvariantViolation(
                f"{trace.operation} result has {trace.result_cols} columns outside [{lower}, {upper}]")
        return report
