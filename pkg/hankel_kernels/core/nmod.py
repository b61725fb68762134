"""
Independency modulo the Nevanlinna class

Symbols are rational functions plus rational-coefficient combinations of
formal atoms. Atoms stand for functions that are not of bounded type and
are independent over the Nevanlinna class, so a relation sum a_j phi_j in N
with Nevanlinna coefficients a_j holds exactly when the atom coefficients
cancel. That makes independency the rank of the stacked atom-coefficient
matrix over the rational function field.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .coefficients import Polynomial, RationalFunction, ONE_RF, ZERO_RF
from .errors import (
    AtomProductError, DependentSetError, InvariantViolation, PreconditionError,
    SingularMultiplierError, UnsupportedShapeError,
)
from .hankel_kernel import HankelKernelEngine, HankelSymbol
from .innerfact import InnerFactorizer, MatrixInner
from .polymat import (
    RatMat, generic_rank, hermite_kernel_basis, independent_columns,
)


@dataclass(frozen=True, order=True)
class Atom:
    """Formal function that is not of bounded type"""

    id: str

    def __str__(self):
        return self.id


class AtomFactory:
    """Hands out fresh atoms a1, a2, ... under an optional namespace"""

    def __init__(self, prefix: str = "a", namespace: str = ""):
        self.prefix = prefix
        self.namespace = namespace
        self.counter = 0

    def fresh(self) -> Atom:
        self.counter += 1
        return Atom(f"{self.namespace}{self.prefix}{self.counter}")


@dataclass(frozen=True, eq=False)
class NSpanEntry:
    """rational + sum_k c_k * atom_k"""

    rational: RationalFunction = ZERO_RF
    atom_terms: Tuple[Tuple[Atom, RationalFunction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'rational', RationalFunction.of(self.rational))
        items = self.atom_terms.items() if isinstance(self.atom_terms, dict) else self.atom_terms
        merged: Dict[Atom, RationalFunction] = {}
        for atom, coefficient in items:
            atom = atom if isinstance(atom, Atom) else Atom(str(atom))
            merged[atom] = merged.get(atom, ZERO_RF) + RationalFunction.of(coefficient)
        terms = tuple(sorted(((a, c) for a, c in merged.items() if not c.is_zero),
                             key=lambda ac: ac[0].id))
        object.__setattr__(self, 'atom_terms', terms)

    @classmethod
    def of(cls, value) -> "NSpanEntry":
        if isinstance(value, NSpanEntry):
            return value
        if isinstance(value, Atom):
            return cls(ZERO_RF, ((value, ONE_RF),))
        return cls(RationalFunction.of(value))

    @property
    def is_rational(self) -> bool:
        return not self.atom_terms

    @property
    def atoms(self) -> Tuple[Atom, ...]:
        return tuple(a for a, _ in self.atom_terms)

    def coefficient(self, atom: Atom) -> RationalFunction:
        for a, c in self.atom_terms:
            if a == atom:
                return c
        return ZERO_RF

    def scale(self, factor) -> "NSpanEntry":
        factor = RationalFunction.of(factor)
        return NSpanEntry(self.rational * factor, tuple((a, c * factor) for a, c in self.atom_terms))

    def __add__(self, other):
        other = NSpanEntry.of(other)
        return NSpanEntry(self.rational + other.rational, self.atom_terms + other.atom_terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-ONE_RF)

    def __sub__(self, other):
        return self + (-NSpanEntry.of(other))

    def __rsub__(self, other):
        return NSpanEntry.of(other) - self

    def __mul__(self, other):
        other = NSpanEntry.of(other)
        if not self.is_rational and not other.is_rational:
            raise AtomProductError(
                f"product of atom terms {self.atoms} and {other.atoms} leaves the N-span class")
        if self.is_rational:
            return other.scale(self.rational)
        return self.scale(other.rational)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = NSpanEntry.of(other)
        return self.rational == other.rational and self.atom_terms == other.atom_terms

    def __hash__(self):
        return hash((self.rational, self.atom_terms))

    def to_json(self):
        return {"rational": self.rational.to_json(),
                "atom_terms": {a.id: c.to_json() for a, c in self.atom_terms}}

    def __str__(self):
        parts = [] if self.rational.is_zero else [str(self.rational)]
        for atom, coefficient in self.atom_terms:
            parts.append(atom.id if coefficient == ONE_RF else f"({coefficient})*{atom.id}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True, eq=False)
class NSpanMatrix:
    rows: int
    cols: int
    entries: Tuple[Tuple[NSpanEntry, ...], ...] = ()

    def __post_init__(self):
        entries = tuple(tuple(NSpanEntry.of(e) for e in row) for row in self.entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "NSpanMatrix":
        rows = [list(row) for row in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, tuple(tuple(r) for r in rows))

    @classmethod
    def from_ratmat(cls, mat: RatMat) -> "NSpanMatrix":
        return cls(mat.rows, mat.cols, mat.entries)

    @classmethod
    def vstack(cls, mats: Sequence["NSpanMatrix"]) -> "NSpanMatrix":
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise ValueError("column counts differ")
        return cls(sum(m.rows for m in mats), cols, sum((m.entries for m in mats), ()))

    def __getitem__(self, index) -> NSpanEntry:
        i, j = index
        return self.entries[i][j]

    def atoms(self) -> Tuple[Atom, ...]:
        return tuple(sorted({a for row in self.entries for e in row for a in e.atoms}))

    def select_columns(self, cols: Sequence[int]) -> "NSpanMatrix":
        return NSpanMatrix(self.rows, len(cols), tuple(tuple(row[j] for j in cols) for row in self.entries))

    def rational_part(self) -> RatMat:
        return RatMat(self.rows, self.cols, tuple(tuple(e.rational for e in row) for row in self.entries))

    def coefficient_matrix(self) -> RatMat:
        """Rows indexed by (coordinate, atom), columns by the symbol's columns"""
        atoms = self.atoms()
        rows = [tuple(e.coefficient(atom) for e in self.entries[i])
                for i, atom in product(range(self.rows), atoms)]
        return RatMat(len(rows), self.cols, tuple(rows))

    def __eq__(self, other):
        if not isinstance(other, NSpanMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def to_json(self):
        return [[e.to_json() for e in row] for row in self.entries]

    def __str__(self):
        return "[" + ",\n ".join("[" + ", ".join(str(e) for e in row) + "]"
                                 for row in self.entries) + "]"


@dataclass(frozen=True, eq=False)
class SymbolicKernel:
    independency: int
    theta: MatrixInner
    constraint_frame: MatrixInner


@dataclass(frozen=True)
class PreservationReport:
    side: str
    before: int
    after: int
    relation: str
    lower: int
    upper: int

    @property
    def holds(self) -> bool:
        return self.lower <= self.after <= self.upper


@dataclass(frozen=True)
class IzCheck:
    alphas: Tuple[str, str]
    offsets: Tuple[str, str]
    kernel_defect: int
    iz_defect: int
    contains_iz: bool
    strict: bool

    @property
    def passed(self) -> bool:
        return self.contains_iz and self.strict and self.kernel_defect == 1 and self.iz_defect == 2


class IndependencyEngine:
    """Independency, symbolic kernels and symbol constructions for N-span symbols"""

    def __init__(self, factorizer: Optional[InnerFactorizer] = None,
                 kernel_engine: Optional[HankelKernelEngine] = None, logger=None):
        self.logger = logger or self._default_logger
        self.factorizer = factorizer or InnerFactorizer(logger=self.logger)
        self.kernel_engine = kernel_engine or HankelKernelEngine(self.factorizer, logger=self.logger)

    @staticmethod
    def _default_logger(message: str, level: str = 'INFO'):
        print(f"[{level}] {message}")

    # -- independency -------------------------------------------------------

    def independency(self, symbol: NSpanMatrix) -> int:
        return generic_rank(symbol.coefficient_matrix())

    def maximal_independent_subset(self, symbol: NSpanMatrix) -> List[int]:
        """Greedy-by-index maximal independent column set (0-based)"""
        return independent_columns(symbol.coefficient_matrix())

    def extend_independent(self, base: NSpanMatrix, pool: NSpanMatrix) -> List[int]:
        """
        Indices of pool columns completing base to an independent set of size |pool|

        Raises:
            DependentSetError: If base or pool is dependent
            PreconditionError: If |base| >= |pool| or the heights differ
        """
        if base.rows != pool.rows:
            raise PreconditionError("column sets live in different dimensions")
        if base.cols >= pool.cols:
            raise PreconditionError("base must be smaller than the pool")
        if self.independency(base) != base.cols:
            raise DependentSetError("base column set is not independent")
        if self.independency(pool) != pool.cols:
            raise DependentSetError("pool column set is not independent")
        joined = NSpanMatrix(base.rows, base.cols + pool.cols,
                             tuple(b + p for b, p in zip(base.entries, pool.entries)))
        needed = pool.cols - base.cols
        chosen = [j - base.cols for j in independent_columns(joined.coefficient_matrix())
                  if j >= base.cols][:needed]
        if len(chosen) != needed:
            raise InvariantViolation("exchange did not reach the pool size")
        return chosen

    # -- kernels ------------------------------------------------------------

    def kernel_symbolic(self, symbol: NSpanMatrix) -> SymbolicKernel:
        """
        Inner Theta (m x (m - ind)) with ker H_Phi = Theta H^2

        Atom constraints are solved first, then the rational part is
        compressed through their frame.
        """
        m = symbol.cols
        coefficients = symbol.coefficient_matrix()
        rank = generic_rank(coefficients)
        self.logger(f"Symbolic kernel of a {symbol.rows}x{m} symbol with independency {rank}")
        if rank == m:
            empty = MatrixInner.empty(m)
            return SymbolicKernel(rank, empty, empty)
        if coefficients.rows == 0 or coefficients.is_zero:
            frame = MatrixInner(RatMat.identity(m))
        else:
            basis = hermite_kernel_basis(coefficients)
            frame = self.factorizer.saturated_frame(basis.to_ratmat())
        compressed = HankelSymbol(symbol.rational_part() @ frame.mat)
        module = self.kernel_engine.module_basis(compressed)
        theta = self.factorizer.inner_outer(frame.mat @ module.to_ratmat()).theta
        if theta.cols != m - rank:
            raise InvariantViolation(f"kernel has {theta.cols} columns, expected {m - rank}")
        if coefficients.rows and not (coefficients @ theta.mat).is_zero:
            raise InvariantViolation("atom constraints do not annihilate the kernel")
        if not self.factorizer.is_analytic(symbol.rational_part() @ theta.mat):
            raise InvariantViolation("rational part times the kernel is not analytic")
        self.logger(f"Kernel inner is {theta.rows}x{theta.cols}", 'SUCCESS')
        return SymbolicKernel(rank, theta, frame)

    # -- multiplication -----------------------------------------------------

    @staticmethod
    def _product(left_rows, right_rows, n, k, m):
        return tuple(
            tuple(sum((NSpanEntry.of(left_rows[i][j]) * NSpanEntry.of(right_rows[j][l])
                       for j in range(k)), NSpanEntry()) for l in range(m))
            for i in range(n))

    def preservation_check(self, symbol: NSpanMatrix, multiplier: RatMat, side: str) -> PreservationReport:
        """Predicted independency relation for a product and the recomputed value"""
        before = self.independency(symbol)
        rank = generic_rank(multiplier)
        if side == 'right':
            product_symbol = self.mul_right(symbol, multiplier)
            s, l = multiplier.rows, multiplier.cols
            if s <= l and rank == s:
                relation, lower, upper = 'equal', before, before
            elif s > l and rank == l:
                relation, lower, upper = 'sandwich', max(before - (s - l), 0), before
            else:
                relation, lower, upper = 'unconstrained', 0, product_symbol.cols
        elif side == 'left':
            product_symbol = self.mul_left(multiplier, symbol)
            l, m = multiplier.rows, multiplier.cols
            if l >= m and rank == m:
                relation, lower, upper = 'equal', before, before
            else:
                relation, lower, upper = 'unconstrained', 0, product_symbol.cols
        else:
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        return PreservationReport(side, before, self.independency(product_symbol), relation, lower, upper)

    def mul_right(self, symbol: NSpanMatrix, multiplier: RatMat, mode: str = 'any') -> NSpanMatrix:
        """
        Phi A

        Args:
            mode: 'equality' requires rank A = rows of A (independency preserved)

        Raises:
            SingularMultiplierError: If mode is 'equality' and the rank condition fails
        """
        if symbol.cols != multiplier.rows:
            raise ValueError(f"cannot multiply {symbol.rows}x{symbol.cols} by {multiplier.rows}x{multiplier.cols}")
        if mode == 'equality' and (multiplier.rows > multiplier.cols
                                   or generic_rank(multiplier) != multiplier.rows):
            raise SingularMultiplierError("right multiplier does not have full row rank")
        entries = self._product(symbol.entries, multiplier.entries,
                                symbol.rows, symbol.cols, multiplier.cols)
        return NSpanMatrix(symbol.rows, multiplier.cols, entries)

    def mul_left(self, multiplier: RatMat, symbol: NSpanMatrix, mode: str = 'any') -> NSpanMatrix:
        """
        A Phi

        Raises:
            SingularMultiplierError: If mode is 'equality' and A lacks full column rank
        """
        if multiplier.cols != symbol.rows:
            raise ValueError(f"cannot multiply {multiplier.rows}x{multiplier.cols} by {symbol.rows}x{symbol.cols}")
        if mode == 'equality' and (multiplier.rows < multiplier.cols
                                   or generic_rank(multiplier) != multiplier.cols):
            raise SingularMultiplierError("left multiplier does not have full column rank")
        entries = self._product(multiplier.entries, symbol.entries,
                                multiplier.rows, multiplier.cols, symbol.cols)
        return NSpanMatrix(multiplier.rows, symbol.cols, entries)

    # -- symbol constructions -----------------------------------------------

    def symbol_for_column_inner(self, theta: MatrixInner,
                                factory: Optional[AtomFactory] = None) -> NSpanMatrix:
        """
        1 x n symbol whose kernel is theta H^2 for a single-column inner

        The last nonzero coordinate k_n is solved for:
        Phi = [a_1, ..., a_(n-1), (1 - sum a_i k_i)/k_n] with fresh atoms,
        using the exact numerator column.
        """
        if theta.cols != 1:
            raise UnsupportedShapeError("symbol_for_column_inner needs a single column")
        factory = factory or AtomFactory()
        column = theta.mat.col(0)
        nonzero = [j for j, e in enumerate(column) if not e.is_zero]
        if not nonzero:
            raise PreconditionError("inner column is zero")
        k = nonzero[-1]
        atoms = {j: factory.fresh() for j in range(theta.rows) if j != k}
        row = []
        for j in range(theta.rows):
            if j != k:
                row.append(NSpanEntry(ZERO_RF, ((atoms[j], ONE_RF),)))
                continue
            terms = tuple((atoms[i], -column[i] / column[k])
                          for i in range(theta.rows) if i != k and not column[i].is_zero)
            row.append(NSpanEntry(ONE_RF / column[k], terms))
        return NSpanMatrix(1, theta.rows, (tuple(row),))

    def symbol_for_inner(self, theta: MatrixInner, factory: Optional[AtomFactory] = None) -> NSpanMatrix:
        """
        Symbol with kernel theta H^2

        Raises:
            UnsupportedShapeError: For non-square inners with two or more columns
        """
        if theta.is_square:
            return NSpanMatrix.from_ratmat(theta.scaled_adjoint())
        if theta.cols == 1:
            return self.symbol_for_column_inner(theta, factory)
        raise UnsupportedShapeError(
            f"no symbol construction for a {theta.rows}x{theta.cols} inner function")

    def verify_symbol(self, theta: MatrixInner, symbol: NSpanMatrix) -> bool:
        """Round trip: the symbol's kernel equals theta H^2 up to a right unitary"""
        kernel = self.kernel_symbolic(symbol).theta
        return self.factorizer.equal_up_to_right_unitary(kernel, theta) is not None

    def iz_counterexample_check(self, samples: Iterable = None) -> List[IzCheck]:
        """
        Compare ker H_[a1/z + h1, a2/z + h2] against z H^2 (+) z H^2

        Each sample is ((a1, a2), (h1, h2)); samples with a zero coefficient
        are skipped.
        """
        samples = list(samples) if samples is not None else DEFAULT_IZ_SAMPLES
        inverse_z = RationalFunction(Polynomial.of(1), Polynomial.monomial(1))
        iz_symbol = RatMat.diagonal([inverse_z, inverse_z])
        iz_defect = self.kernel_engine.kernel_rational(iz_symbol).defect_dim
        shift_columns = [RatMat.column([RationalFunction(Polynomial.monomial(1)), ZERO_RF]),
                         RatMat.column([ZERO_RF, RationalFunction(Polynomial.monomial(1))])]
        results = []
        for (a1, a2), (h1, h2) in samples:
            a1, a2 = RationalFunction.of(a1), RationalFunction.of(a2)
            if a1.is_zero or a2.is_zero:
                self.logger(f"Skipping sample with coefficients ({a1}, {a2})", 'WARNING')
                continue
            h1, h2 = RationalFunction.of(h1), RationalFunction.of(h2)
            symbol = HankelSymbol(RatMat.from_rows([[a1 * inverse_z + h1, a2 * inverse_z + h2]]))
            kernel = self.kernel_engine.kernel_rational(symbol)
            contains = all(self.kernel_engine.kernel_membership(symbol, c) for c in shift_columns)
            witness = RatMat.column([a2, -a1])
            strict = self.kernel_engine.kernel_membership(symbol, witness)
            results.append(IzCheck((str(a1), str(a2)), (str(h1), str(h2)),
                                   kernel.defect_dim, iz_defect, contains, strict))
        return results


def _default_iz_samples():
    z = RationalFunction(Polynomial.monomial(1))
    half = RationalFunction(Polynomial.of(1), Polynomial.of(1) - Polynomial.monomial(1, "1/2"))
    return [
        ((1, 1), (0, 0)),
        ((1, -1), (z, z * z)),
        ((2, "1/3"), (half, 0)),
        (("i", 3), (0, z + 1)),
        (("1/2+1/2i", -5), (z * half, "1/4")),
    ]


DEFAULT_IZ_SAMPLES = _default_iz_samples()
