"""
Matrix inner functions and inner-outer factorization

An inner function is carried as a numerator matrix N with exact column
norms w: N*N = diag(w) as a rational identity, and the inner function is
N diag(1/g) where |g_j|^2 = w_j on the circle. Constant norms are the
usual exact tags (for example 2 for a column (z, z) meaning (z, z)/sqrt(2));
a non-constant norm appears only when the outer normalizer of a column
direction has irrational roots, and then g is evaluated numerically.

Inner factors are peeled one irreducible factor q of the disk zeros at a
time, so a peel has Blaschke part q/reflect(q) and may carry several
irrational zeros. Results of GCD and LCM go through canonical_form, which
fixes the representative up to constant right unitaries.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .circle_analysis import BlaschkeProduct, blaschke_factor, is_analytic as scalar_is_analytic
from .coefficients import (
    GaussianRational, Polynomial, RationalFunction,
    ONE, ZERO, ONE_RF, ZERO_RF, poly_gcd, poly_gcd_all, poly_lcm_all, poly_xgcd,
)
from .errors import (
    CircleDegenerateError, DomainRejection, InexactFactorizationError,
    InvariantViolation, IrrationalRootError, NotAnalyticError, PreconditionError,
)
from .polymat import (
    RatMat, constant_kernel, conjugate_transpose, generic_rank,
    independent_columns, inverse, maximal_minor_gcd,
)
from .roots import (
    CIRCLE, DISK_MARGIN, NumericOuter, classify, disk_split, gaussian_factors, numeric_roots,
    spectral_factor,
)

# Points tried in order when fixing the canonical frame of an inner function
BASE_POINTS = tuple(GaussianRational.parse(p) for p in (
    "0", "1/2", "-1/2", "1/2i", "-1/2i", "1/3", "-1/3", "2/3", "-2/3"))


@dataclass(frozen=True)
class InnerCertificate:
    """Outcome of an exact inner check; falsy with a witness on failure"""

    ok: bool
    witness: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True, eq=False)
class MatrixInner:
    """Inner function N diag(1/g) with N*N = diag(norms) exactly"""

    mat: RatMat
    norms: Tuple[RationalFunction, ...] = ()

    def __post_init__(self):
        norms = tuple(RationalFunction.of(w) for w in self.norms) if self.norms \
            else tuple(ONE_RF for _ in range(self.mat.cols))
        if len(norms) != self.mat.cols:
            raise ValueError("one norm per column is required")
        object.__setattr__(self, 'norms', norms)

    @classmethod
    def tagged(cls, mat: RatMat, tags: Sequence) -> "MatrixInner":
        """Columns with exact constant squared norms"""
        return cls(mat, tuple(RationalFunction.constant(GaussianRational.of(t)) for t in tags))

    @classmethod
    def empty(cls, rows: int) -> "MatrixInner":
        return cls(RatMat.from_columns([], rows), ())

    @property
    def rows(self) -> int:
        return self.mat.rows

    @property
    def cols(self) -> int:
        return self.mat.cols

    @property
    def is_square(self) -> bool:
        return self.mat.is_square

    @property
    def tags(self) -> Tuple[Optional[Fraction], ...]:
        """Constant squared norms, None where the norm is not constant"""
        return tuple(w.constant_value.re if w.is_constant else None for w in self.norms)

    @property
    def is_exactly_normalized(self) -> bool:
        return all(w.is_constant for w in self.norms)

    def gram(self) -> RatMat:
        return self.mat.adjoint() @ self.mat

    def scaled_adjoint(self) -> RatMat:
        """diag(1/w) N*, a left inverse of N"""
        return RatMat.diagonal([ONE_RF / w for w in self.norms]) @ self.mat.adjoint()

    @cached_property
    def normalizers(self) -> List[NumericOuter]:
        return [NumericOuter(w) for w in self.norms]

    def evaluate(self, z) -> np.ndarray:
        """Numeric value of the inner function at a circle or disk point"""
        value = self.mat.evaluate(z)
        for j, g in enumerate(self.normalizers):
            value[:, j] = value[:, j] / g(z)
        return value

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "numerator": self.mat.to_json(),
            "norms": [w.to_json() for w in self.norms],
        }

    def __str__(self):
        tags = ", ".join(str(w) for w in self.norms)
        return f"{self.mat}\n  column norms: [{tags}]"


@dataclass(frozen=True, eq=False)
class BPFactor:
    """
    Elementary factor I + (B - 1) K

    B is the Blaschke product of zero_poly: a single disk point alpha, or a
    whole irreducible factor over Q(i) whose roots are not Gaussian
    rational. K = D^-1 w w* / (w* D^-1 w) for the null vector w and the
    diagonal of column tags D. With unit tags K is the orthogonal
    projection onto w.
    """

    alpha: Optional[GaussianRational]
    vector: Tuple[GaussianRational, ...]
    weights: Tuple[Fraction, ...] = ()
    zero_poly: Optional[Polynomial] = None

    def __post_init__(self):
        if not self.weights:
            object.__setattr__(self, 'weights', tuple(Fraction(1) for _ in self.vector))
        if self.zero_poly is None:
            object.__setattr__(self, 'zero_poly', Polynomial((-GaussianRational.of(self.alpha), ONE)))
        elif self.alpha is None and self.zero_poly.degree == 1:
            object.__setattr__(self, 'alpha', -self.zero_poly.monic().coeff(0))

    @property
    def degree(self) -> int:
        return self.zero_poly.degree

    def blaschke(self) -> RationalFunction:
        return BlaschkeProduct(self.zero_poly).as_rational()

    def coordinate_projection(self) -> RatMat:
        w = self.vector
        scale = sum((c.abs2() / d for c, d in zip(w, self.weights)), Fraction(0))
        return RatMat(len(w), len(w), tuple(
            tuple(RationalFunction.constant(w[i] * w[j].conjugate() / (self.weights[i] * scale))
                  for j in range(len(w)))
            for i in range(len(w))))

    def projection(self) -> RatMat:
        """Orthogonal projection w w*/(w* w)"""
        return BPFactor(self.alpha, self.vector, zero_poly=self.zero_poly).coordinate_projection()

    def matrix(self) -> RatMat:
        k = self.coordinate_projection()
        return RatMat.identity(len(self.vector)) + k * (self.blaschke() - ONE_RF)


@dataclass(frozen=True, eq=False)
class OuterFactor:
    """Outer function G = diag(g) Y where Y = diag(1/w) N* F is stored exactly"""

    scaled: RatMat
    norms: Tuple[RationalFunction, ...]

    @cached_property
    def normalizers(self) -> List[NumericOuter]:
        return [NumericOuter(w) for w in self.norms]

    def evaluate(self, z) -> np.ndarray:
        value = self.scaled.evaluate(z)
        for i, g in enumerate(self.normalizers):
            value[i, :] = value[i, :] * g(z)
        return value


@dataclass(frozen=True, eq=False)
class InnerOuterResult:
    theta: MatrixInner
    outer: OuterFactor
    rank: int
    factors: Tuple[BPFactor, ...] = ()

    def reassembled(self) -> RatMat:
        return self.theta.mat @ self.outer.scaled


@dataclass(frozen=True, eq=False)
class RightUnitary:
    """A = B W: mixing is the exact X with N_A = N_B X, unitary is W at z = 1"""

    mixing: RatMat
    unitary: np.ndarray = field(default=None)


class InnerFactorizer:
    """Certification and factorization of rational matrix inner functions"""

    def __init__(self, margin: float = DISK_MARGIN, logger=None):
        """
        Initialize the factorizer

        Args:
            margin: Distance from the circle under which a root counts as on it
            logger: Optional logging callable (message, level)
        """
        self.margin = margin
        self.logger = logger or self._default_logger

    @staticmethod
    def _default_logger(message: str, level: str = 'INFO'):
        print(f"[{level}] {message}")

    # -- predicates ---------------------------------------------------------

    def is_analytic(self, mat: RatMat) -> bool:
        return all(scalar_is_analytic(e, self.margin) for row in mat.entries for e in row)

    def is_inner(self, mat: RatMat, tags: Sequence = None) -> InnerCertificate:
        """
        Exact inner check

        Args:
            mat: Candidate numerator matrix
            tags: Optional positive rational squared column norms (default 1)
        """
        if mat.rows < mat.cols:
            return InnerCertificate(False, f"{mat.rows}x{mat.cols} cannot be isometric")
        for i, row in enumerate(mat.entries):
            for j, e in enumerate(row):
                if not scalar_is_analytic(e, self.margin):
                    return InnerCertificate(False, f"entry ({i},{j}) = {e} is not analytic")
        expected = [GaussianRational.of(t) for t in tags] if tags is not None else [ONE] * mat.cols
        if any(t.im != 0 or t.re <= 0 for t in expected):
            return InnerCertificate(False, "column tags must be positive rationals")
        gram = mat.adjoint() @ mat
        for i in range(mat.cols):
            for j in range(mat.cols):
                target = RationalFunction.constant(expected[i]) if i == j else ZERO_RF
                if gram[i, j] != target:
                    return InnerCertificate(False, f"(M*M)[{i},{j}] = {gram[i, j]}, expected {target}")
        return InnerCertificate(True)

    def certify(self, theta: MatrixInner) -> InnerCertificate:
        """Check N analytic, N*N = diag(norms) and norms positive on the circle"""
        mat = theta.mat
        for i, row in enumerate(mat.entries):
            for j, e in enumerate(row):
                if not scalar_is_analytic(e, self.margin):
                    return InnerCertificate(False, f"entry ({i},{j}) = {e} is not analytic")
        gram = theta.gram()
        for i in range(theta.cols):
            for j in range(theta.cols):
                target = theta.norms[i] if i == j else ZERO_RF
                if gram[i, j] != target:
                    return InnerCertificate(False, f"(N*N)[{i},{j}] = {gram[i, j]}, expected {target}")
        for j, w in enumerate(theta.norms):
            if w.num.degree > 0 and any(classify(root, self.margin) == CIRCLE
                                        for root in numeric_roots(w.num)):
                return InnerCertificate(False, f"norm of column {j} vanishes on the circle")
            value = w(ONE)
            if value.im != 0 or value.re <= 0:
                return InnerCertificate(False, f"norm of column {j} is not positive")
        return InnerCertificate(True)

    # -- elementary factors -------------------------------------------------

    def bp_extract(self, mat: RatMat, alpha) -> Tuple[BPFactor, RatMat]:
        """
        Peel one Blaschke-Potapov factor at a zero of det M

        Returns:
            (factor, rest) with M = factor.matrix() @ rest exactly

        Raises:
            PreconditionError: If alpha is not in the open disk or det M(alpha) != 0
        """
        alpha = GaussianRational.of(alpha)
        if not mat.is_square:
            raise PreconditionError("bp_extract needs a square matrix")
        if alpha.abs2() >= 1:
            raise PreconditionError(f"{alpha} is not in the open unit disk")
        if not self.is_analytic(mat):
            raise NotAnalyticError("bp_extract needs an analytic matrix")
        value = mat.at(alpha)
        null = constant_kernel(conjugate_transpose(value), mat.rows)
        if not null:
            raise PreconditionError(f"det M does not vanish at {alpha}")
        factor = BPFactor(alpha, tuple(null[0]))
        b = blaschke_factor(alpha).as_rational()
        projection = factor.coordinate_projection()
        rest = mat + (projection @ mat) * (ONE_RF / b - ONE_RF)
        if not self.is_analytic(rest):
            raise InvariantViolation(f"remainder after peeling {alpha} is not analytic")
        self.logger(f"Peeled Blaschke-Potapov factor at {alpha}", 'DEBUG')
        return factor, rest

    # -- frames -------------------------------------------------------------

    def _normalize_column(self, vector: Sequence[RationalFunction]):
        """Content-free polynomial direction of a vector and its norm"""
        den = poly_lcm_all(v.den for v in vector)
        polys = [(v * RationalFunction(den)).num for v in vector]
        content = poly_gcd_all(polys)
        split = disk_split(content, self.margin)
        removable = split.inside * split.circle
        polys = [p.exact_div(removable) for p in polys]
        column = [RationalFunction(p) for p in polys]
        weight = sum((c.adjoint() * c for c in column), ZERO_RF)
        factor = spectral_factor(weight, self.margin)
        if factor is None:
            self.logger("Column normalizer is irrational; keeping its Laurent norm", 'DEBUG')
            return column, weight
        g0, scale = factor
        return [c / g0 for c in column], RationalFunction.constant(scale)

    def _orthogonal_frame(self, mat: RatMat) -> Tuple[RatMat, List[RationalFunction]]:
        """Gram-Schmidt over the function field on the greedy independent columns"""
        columns: List[List[RationalFunction]] = []
        norms: List[RationalFunction] = []
        for j in independent_columns(mat):
            vector = list(mat.col(j))
            projected = list(vector)
            for column, norm in zip(columns, norms):
                coefficient = sum((c.adjoint() * v for c, v in zip(column, vector)), ZERO_RF) / norm
                if coefficient.is_zero:
                    continue
                projected = [p - c * coefficient for p, c in zip(projected, column)]
            column, norm = self._normalize_column(projected)
            columns.append(column)
            norms.append(norm)
        return RatMat.from_columns(columns, mat.rows), norms

    def _tag_matrix(self, norms: Sequence[RationalFunction]) -> List[Fraction]:
        return [w.constant_value.re if w.is_constant else Fraction(1) for w in norms]

    def _selection_rows(self, norms, size) -> List[List[GaussianRational]]:
        """Rows forcing a null vector to vanish on non-constant-norm columns"""
        return [[ONE if k == j else ZERO for k in range(size)]
                for j, w in enumerate(norms) if not w.is_constant]

    # -- disk zeros ---------------------------------------------------------

    def _disk_zeros(self, minors: Polynomial, message: str) -> Polynomial:
        split = disk_split(minors, self.margin)
        if split.circle.degree > 0:
            raise CircleDegenerateError(message, split.circle_witness())
        return split.inside

    @staticmethod
    def _peel_order(inside: Polynomial) -> List[Polynomial]:
        """Irreducible disk factors: Gaussian points by (re, im) first, then the rest"""
        def key(q):
            if q.degree == 1:
                root = -q.coeff(0)
                return 1, root.re, root.im, ""
            return q.degree, 0, 0, str(q)
        return sorted((q for q, _ in gaussian_factors(inside)), key=key)

    @staticmethod
    def _residues(entry: RationalFunction, q: Polynomial) -> List[GaussianRational]:
        """Coefficients of entry mod q; q must be coprime to the denominator"""
        common, inverse_den, _ = poly_xgcd(entry.den, q)
        if common.degree > 0:
            raise InvariantViolation(f"{q} divides a denominator of an analytic matrix")
        reduced = (entry.num * inverse_den) % q
        return [reduced.coeff(t) for t in range(q.degree)]

    def _null_conditions(self, mat: RatMat, q: Polynomial, left: bool) -> List[List[GaussianRational]]:
        """
        Linear conditions for a constant vector v with v* M = 0 (left) or
        M v = 0 (right) modulo q, which is M vanishing along v at every root of q
        """
        residues = [[self._residues(e, q) for e in row] for row in mat.entries]
        if left:
            return [[residues[i][j][t].conjugate() for i in range(mat.rows)]
                    for j in range(mat.cols) for t in range(q.degree)]
        return [[residues[i][j][t] for j in range(mat.cols)]
                for i in range(mat.rows) for t in range(q.degree)]

    def _find_peel(self, mat: RatMat, inside: Polynomial, candidates, norms, left: bool):
        """
        First irreducible disk factor with an exact common null direction

        Raises:
            InexactFactorizationError: If the only directions touch a column
                with an irrational normalizer
            IrrationalRootError: If no factor has a direction over Q(i)
        """
        size = mat.rows if left else mat.cols
        blocked = False
        for q in candidates:
            if not q.divides(inside):
                continue
            conditions = self._null_conditions(mat, q, left)
            null = constant_kernel(conditions + self._selection_rows(norms, size), size)
            if null:
                return q, null[0]
            blocked = blocked or bool(constant_kernel(conditions, size))
        if blocked:
            raise InexactFactorizationError(
                f"disk zeros {inside} can only be peeled through a column with an irrational normalizer")
        raise IrrationalRootError(
            f"disk zeros {inside} are not Gaussian rational and share no exact null direction")

    @staticmethod
    def _shrink(inside: Polynomial, minors: Polynomial, q: Polynomial) -> Polynomial:
        remaining = poly_gcd(minors, inside)
        if remaining.degree >= inside.degree:
            raise InvariantViolation(f"peeling {q} left the disk zeros unchanged")
        return remaining

    def _saturate(self, frame: RatMat, norms) -> RatMat:
        """Right-peel disk zeros of the maximal minors of a tall frame"""
        weights = self._tag_matrix(norms)
        r = frame.cols
        inside = self._disk_zeros(maximal_minor_gcd(frame.transpose()),
                                  "generators drop rank on the unit circle")
        candidates = self._peel_order(inside)
        for _ in range(inside.degree + 1):
            if inside.degree <= 0:
                return frame
            q, y = self._find_peel(frame, inside, candidates, norms, left=False)
            scale = sum((c.abs2() * d for c, d in zip(y, weights)), Fraction(0))
            k = RatMat(r, r, tuple(
                tuple(RationalFunction.constant(y[i] * y[j].conjugate() * weights[j] / scale)
                      for j in range(r)) for i in range(r)))
            b = BlaschkeProduct(q).as_rational()
            frame = frame @ (RatMat.identity(r) + k * (ONE_RF / b - ONE_RF))
            inside = self._shrink(inside, maximal_minor_gcd(frame.transpose()), q)
            self.logger(f"Saturated frame at the zeros of {q}", 'DEBUG')
        raise InvariantViolation("frame saturation did not terminate")

    def saturated_frame(self, mat: RatMat) -> MatrixInner:
        """
        Inner function of {f in H^2 : f(z) in range F(z) on the circle}

        Raises:
            DomainRejection: If F is zero
        """
        if mat.is_zero:
            raise DomainRejection("the zero matrix generates no subspace")
        r = generic_rank(mat)
        if r == mat.rows:
            return MatrixInner(RatMat.identity(mat.rows))
        frame, norms = self._orthogonal_frame(mat)
        frame = self._saturate(frame, norms)
        return MatrixInner(frame, tuple(norms))

    def _peel_left(self, numer: RatMat, norms, scaled: RatMat):
        """
        Move the disk zeros of the maximal minors of scaled into numer

        Each peel removes at least one zero, so the loop runs at most
        deg(inside part of the minors) times.
        """
        weights = self._tag_matrix(norms)
        r = numer.cols
        inside = self._disk_zeros(maximal_minor_gcd(scaled), "matrix drops rank on the unit circle")
        candidates = self._peel_order(inside)
        factors = []
        for _ in range(inside.degree + 1):
            if inside.degree <= 0:
                return numer, scaled, tuple(factors)
            q, vector = self._find_peel(scaled, inside, candidates, norms, left=True)
            factor = BPFactor(None, tuple(vector), tuple(weights), q)
            k = factor.coordinate_projection()
            b = factor.blaschke()
            numer = numer @ (RatMat.identity(r) + k * (b - ONE_RF))
            scaled = (RatMat.identity(r) + k * (ONE_RF / b - ONE_RF)) @ scaled
            factors.append(factor)
            inside = self._shrink(inside, maximal_minor_gcd(scaled), q)
            self.logger(f"Peeled Blaschke-Potapov factor at the zeros of {q}", 'DEBUG')
        raise InvariantViolation("inner factor extraction did not terminate")

    def inner_outer(self, mat: RatMat) -> InnerOuterResult:
        """
        Inner-outer factorization F = Theta G of an analytic rational matrix

        Returns:
            InnerOuterResult whose theta has generic_rank(F) columns and whose
            outer factor reassembles F exactly

        Raises:
            DomainRejection: If F is zero
            NotAnalyticError: If F has poles in the closed disk
            CircleDegenerateError: If F drops rank on the circle
        """
        if mat.is_zero:
            raise DomainRejection("the zero matrix has no inner-outer factorization")
        if not self.is_analytic(mat):
            raise NotAnalyticError("inner_outer needs a matrix analytic in the closed disk")
        self.logger(f"Inner-outer factorization of a {mat.rows}x{mat.cols} matrix")
        frame = self.saturated_frame(mat)
        numer, norms = frame.mat, frame.norms
        scaled = RatMat.diagonal([ONE_RF / w for w in norms]) @ numer.adjoint() @ mat
        if not self.is_analytic(scaled):
            raise InvariantViolation("projection onto the saturated frame is not analytic")
        numer, scaled, factors = self._peel_left(numer, norms, scaled)
        if numer @ scaled != mat:
            raise InvariantViolation("inner-outer factors do not reassemble the input")
        theta = MatrixInner(numer, norms)
        self.logger(f"Inner factor is {theta.rows}x{theta.cols} after {len(factors)} peels", 'SUCCESS')
        return InnerOuterResult(theta, OuterFactor(scaled, norms), numer.cols, factors)

    # -- comparison ---------------------------------------------------------

    def _solve(self, left: RatMat, right: RatMat) -> Optional[RatMat]:
        """Exact X with left X = right, using independent rows of left"""
        rows = independent_columns(left.transpose())
        if len(rows) != left.cols:
            return None
        square = left.submatrix(rows, range(left.cols))
        solution = inverse(square) @ right.submatrix(rows, range(right.cols))
        if left @ solution != right:
            return None
        return solution

    def equal_up_to_right_unitary(self, first: MatrixInner, second: MatrixInner) -> Optional[RightUnitary]:
        """
        Find W with first = second W and W constant unitary

        Returns:
            RightUnitary with the exact numerator mixing, or None
        """
        if first.rows != second.rows or first.cols != second.cols:
            return None
        if first.cols == 0:
            return RightUnitary(RatMat(0, 0, ()), np.zeros((0, 0), dtype=complex))
        forward = self._solve(second.mat, first.mat)
        backward = self._solve(first.mat, second.mat)
        if forward is None or backward is None:
            return None
        if not (self.is_analytic(forward) and self.is_analytic(backward)):
            return None
        gram = forward.adjoint() @ RatMat.diagonal(second.norms) @ forward
        if gram != RatMat.diagonal(first.norms):
            return None
        point = 1.0 + 0j
        outer_second = np.array([g(point) for g in second.normalizers])
        outer_first = np.array([g(point) for g in first.normalizers])
        unitary = (outer_second[:, None] * forward.evaluate(point)) / outer_first[None, :]
        return RightUnitary(forward, unitary)

    # -- canonical representative ------------------------------------------

    def _base_point(self, theta: MatrixInner):
        """First base point where the numerator has full column rank, with its rows"""
        for point in BASE_POINTS:
            value = theta.mat.at(point)
            rows = independent_columns(RatMat.from_rows(value).transpose())
            if len(rows) == theta.cols:
                return point, [value[i] for i in rows]
        return None, []

    def canonical_form(self, theta: MatrixInner) -> MatrixInner:
        """
        Representative of theta fixed up to constant right unitaries

        At the base point the first independent rows of the numerator form a
        block that becomes upper triangular with ones on the diagonal, so the
        inner function itself is upper triangular there with a positive
        diagonal. Two inners equal up to a right unitary get identical
        numerators and tags. Inners with non-constant column norms are
        returned unchanged.

        Raises:
            InvariantViolation: If the new frame is not orthogonal
        """
        if theta.cols == 0 or not theta.is_exactly_normalized:
            return theta
        point, block = self._base_point(theta)
        if point is None:
            self.logger("No base point with full column rank; keeping the frame", 'WARNING')
            return theta
        tags = theta.tags
        cols = theta.cols

        def inner(x, y):
            return sum((a * b.conjugate() / w for a, b, w in zip(x, y, tags)), ZERO)

        directions: List[List[GaussianRational]] = [[] for _ in range(cols)]
        for k in reversed(range(cols)):
            direction = list(block[k])
            for j in range(k + 1, cols):
                c = inner(block[k], directions[j]) / inner(directions[j], directions[j])
                direction = [a - c * b for a, b in zip(direction, directions[j])]
            directions[k] = direction
        sizes = [inner(d, d).re for d in directions]
        mixing = RatMat(cols, cols, tuple(
            tuple(directions[k][t].conjugate() / (sizes[k] * tags[t]) for k in range(cols))
            for t in range(cols)))
        canonical = MatrixInner.tagged(theta.mat @ mixing, [1 / s for s in sizes])
        if canonical.gram() != RatMat.diagonal(canonical.norms):
            raise InvariantViolation("canonical frame is not orthogonal")
        self.logger(f"Canonical frame at z={point}", 'DEBUG')
        return canonical
