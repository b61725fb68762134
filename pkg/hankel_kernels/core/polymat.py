"""
Exact linear algebra for rational and polynomial matrices

Rank, determinants and kernels come from fraction-free (Bareiss) elimination
over the polynomial ring with the lowest-degree pivot in each column.
Interpolation-module bases are built from the exact solution space of the
quotient conditions B f = 0 mod p and put into a column Hermite form.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, Tuple

from .coefficients import (
    GaussianRational, Polynomial, RationalFunction,
    ONE, ZERO, ONE_POLY, ZERO_POLY, ONE_RF, ZERO_RF,
    poly_gcd, poly_gcd_all, poly_lcm_all,
)


@dataclass(frozen=True, eq=False)
class RatMat:
    """n x m matrix of rational functions (zero rows or columns allowed)"""

    rows: int
    cols: int
    entries: Tuple[Tuple[RationalFunction, ...], ...] = ()

    def __post_init__(self):
        entries = tuple(tuple(RationalFunction.of(e) for e in row) for row in self.entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")
        object.__setattr__(self, 'entries', entries)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMat":
        rows = [list(row) for row in rows]
        if not rows:
            raise ValueError("use RatMat(0, cols) for a matrix without rows")
        return cls(len(rows), len(rows[0]), tuple(tuple(row) for row in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int = None) -> "RatMat":
        columns = [list(col) for col in columns]
        if not columns:
            if rows is None:
                raise ValueError("row count needed for a matrix without columns")
            return cls(rows, 0, tuple(() for _ in range(rows)))
        n = len(columns[0])
        return cls(n, len(columns), tuple(tuple(col[i] for col in columns) for i in range(n)))

    @classmethod
    def column(cls, values: Sequence) -> "RatMat":
        return cls(len(values), 1, tuple((v,) for v in values))

    @classmethod
    def identity(cls, n: int) -> "RatMat":
        return cls(n, n, tuple(tuple(ONE_RF if i == j else ZERO_RF for j in range(n))
                               for i in range(n)))

    @classmethod
    def zeros(cls, n: int, m: int) -> "RatMat":
        return cls(n, m, tuple(tuple(ZERO_RF for _ in range(m)) for _ in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence) -> "RatMat":
        n = len(values)
        return cls(n, n, tuple(tuple(values[i] if i == j else ZERO_RF for j in range(n))
                               for i in range(n)))

    @classmethod
    def hstack(cls, mats: Sequence["RatMat"]) -> "RatMat":
        n = mats[0].rows
        if any(m.rows != n for m in mats):
            raise ValueError("row counts differ")
        return cls(n, sum(m.cols for m in mats),
                   tuple(sum((m.entries[i] for m in mats), ()) for i in range(n)))

    @classmethod
    def vstack(cls, mats: Sequence["RatMat"]) -> "RatMat":
        m = mats[0].cols
        if any(mat.cols != m for mat in mats):
            raise ValueError("column counts differ")
        return cls(sum(mat.rows for mat in mats), m, sum((mat.entries for mat in mats), ()))

    # -- access -------------------------------------------------------------

    def __getitem__(self, index) -> RationalFunction:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[RationalFunction, ...]:
        return self.entries[i]

    def col(self, j: int) -> Tuple[RationalFunction, ...]:
        return tuple(row[j] for row in self.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMat":
        return RatMat(len(rows), len(cols),
                      tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def select_columns(self, cols: Sequence[int]) -> "RatMat":
        return self.submatrix(range(self.rows), cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.entries for e in row)

    @property
    def is_polynomial(self) -> bool:
        return all(e.is_polynomial for row in self.entries for e in row)

    @property
    def is_constant(self) -> bool:
        return all(e.is_constant for row in self.entries for e in row)

    # -- algebra ------------------------------------------------------------

    def transpose(self) -> "RatMat":
        return RatMat(self.cols, self.rows, tuple(self.col(j) for j in range(self.cols)))

    def adjoint(self) -> "RatMat":
        """Entrywise circle adjoint, transposed"""
        return RatMat(self.cols, self.rows,
                      tuple(tuple(self.entries[i][j].adjoint() for i in range(self.rows))
                            for j in range(self.cols)))

    def map(self, fn) -> "RatMat":
        return RatMat(self.rows, self.cols, tuple(tuple(fn(e) for e in row) for row in self.entries))

    def __add__(self, other: "RatMat") -> "RatMat":
        self._check_same_shape(other)
        return RatMat(self.rows, self.cols,
                      tuple(tuple(a + b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "RatMat") -> "RatMat":
        self._check_same_shape(other)
        return RatMat(self.rows, self.cols,
                      tuple(tuple(a - b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self) -> "RatMat":
        return self.map(lambda e: -e)

    def __mul__(self, scalar) -> "RatMat":
        scalar = RationalFunction.of(scalar)
        return self.map(lambda e: e * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: "RatMat") -> "RatMat":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ZERO_RF
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.is_zero:
                        continue
                    b = other.entries[k][j]
                    if not b.is_zero:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return RatMat(self.rows, other.cols, tuple(out))

    def _check_same_shape(self, other: "RatMat"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def at(self, point) -> List[List[GaussianRational]]:
        """Exact value at a Gaussian rational point"""
        return [[e(point) for e in row] for row in self.entries]

    def evaluate(self, z):
        """Numeric value at a complex point as a numpy array"""
        import numpy as np
        return np.array([[e.evaluate(z) for e in row] for row in self.entries],
                        dtype=complex).reshape(self.rows, self.cols)

    def __eq__(self, other):
        if not isinstance(other, RatMat):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def to_json(self):
        return [[e.to_json() for e in row] for row in self.entries]

    def __str__(self):
        return "[" + ",\n ".join("[" + ", ".join(str(e) for e in row) + "]"
                                 for row in self.entries) + "]"


@dataclass(frozen=True, eq=False)
class PolyMat:
    """n x m matrix of polynomials"""

    rows: int
    cols: int
    entries: Tuple[Tuple[Polynomial, ...], ...] = ()

    def __post_init__(self):
        entries = tuple(tuple(Polynomial.of(e) for e in row) for row in self.entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def identity(cls, n: int) -> "PolyMat":
        return cls(n, n, tuple(tuple(ONE_POLY if i == j else ZERO_POLY for j in range(n))
                               for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Polynomial]], rows: int) -> "PolyMat":
        return cls(rows, len(columns), tuple(tuple(col[i] for col in columns) for i in range(rows)))

    @classmethod
    def from_ratmat(cls, mat: RatMat) -> "PolyMat":
        if not mat.is_polynomial:
            raise ValueError("matrix has non-polynomial entries")
        return cls(mat.rows, mat.cols, tuple(tuple(e.num for e in row) for row in mat.entries))

    def __getitem__(self, index) -> Polynomial:
        i, j = index
        return self.entries[i][j]

    def col(self, j: int) -> Tuple[Polynomial, ...]:
        return tuple(row[j] for row in self.entries)

    def to_ratmat(self) -> RatMat:
        return RatMat(self.rows, self.cols, self.entries)

    def column_degrees(self) -> Tuple[int, ...]:
        return tuple(max(p.degree for p in self.col(j)) for j in range(self.cols))

    def __eq__(self, other):
        if not isinstance(other, PolyMat):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __str__(self):
        return self.to_ratmat().__str__()


# -- fraction-free elimination ------------------------------------------------

def _cleared_rows(mat) -> Tuple[List[List[Polynomial]], List[Polynomial]]:
    """Multiply each row by the lcm of its denominators"""
    if isinstance(mat, PolyMat):
        return [list(row) for row in mat.entries], [ONE_POLY] * mat.rows
    rows, scales = [], []
    for row in mat.entries:
        den = poly_lcm_all(e.den for e in row)
        rows.append([(e * RationalFunction(den)).num for e in row])
        scales.append(den)
    return rows, scales


def _echelon(rows: List[List[Polynomial]], ncols: int):
    """
    Bareiss row echelon form

    Returns:
        (rows, pivot columns, sign of the row permutation)
    """
    a = [list(row) for row in rows]
    nrows = len(a)
    pivots: List[int] = []
    sign = 1
    previous = ONE_POLY
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        candidates = [i for i in range(r, nrows) if not a[i][c].is_zero]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: (a[i][c].degree, i))
        if best != r:
            a[r], a[best] = a[best], a[r]
            sign = -sign
        pivot = a[r][c]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                a[i][j] = (pivot * a[i][j] - a[i][c] * a[r][j]).exact_div(previous)
            a[i][c] = ZERO_POLY
        previous = pivot
        pivots.append(c)
        r += 1
    return a, pivots, sign


def generic_rank(mat) -> int:
    """Rank over the rational function field"""
    if mat.rows == 0 or mat.cols == 0:
        return 0
    rows, _ = _cleared_rows(mat)
    return len(_echelon(rows, mat.cols)[1])


def independent_columns(mat) -> List[int]:
    """Greedy-by-index maximal set of independent columns"""
    if mat.rows == 0 or mat.cols == 0:
        return []
    rows, _ = _cleared_rows(mat)
    return _echelon(rows, mat.cols)[1]


def determinant(mat: RatMat) -> RationalFunction:
    if not mat.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = mat.rows
    if n == 0:
        return ONE_RF
    rows, scales = _cleared_rows(mat)
    reduced, pivots, sign = _echelon(rows, n)
    if len(pivots) < n:
        return ZERO_RF
    scale = ONE_POLY
    for s in scales:
        scale = scale * s
    return RationalFunction(reduced[n - 1][n - 1] * sign, scale)


def classical_adjoint(mat: RatMat) -> RatMat:
    """Cofactor transpose; M * adj(M) = det(M) * I"""
    if not mat.is_square:
        raise ValueError("classical adjoint of a non-square matrix")
    n = mat.rows
    if n == 1:
        return RatMat.identity(1)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = mat.submatrix([r for r in range(n) if r != j], [c for c in range(n) if c != i])
            cofactor = determinant(minor)
            row.append(cofactor if (i + j) % 2 == 0 else -cofactor)
        out.append(tuple(row))
    return RatMat(n, n, tuple(out))


def inverse(mat: RatMat) -> RatMat:
    det = determinant(mat)
    if det.is_zero:
        raise ZeroDivisionError("matrix is singular over the function field")
    if mat.rows == 1:
        return RatMat(1, 1, ((ONE_RF / mat[0, 0],),))
    return classical_adjoint(mat) * (ONE_RF / det)


def _kernel_from_echelon(reduced, pivots, ncols) -> List[List[RationalFunction]]:
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [ZERO_RF] * ncols
        x[f] = ONE_RF
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            acc = ZERO_RF
            for j in range(c + 1, ncols):
                if not reduced[k][j].is_zero and not x[j].is_zero:
                    acc = acc + RationalFunction(reduced[k][j]) * x[j]
            x[c] = -acc / RationalFunction(reduced[k][c])
        basis.append(x)
    return basis


def right_kernel(mat) -> List[List[RationalFunction]]:
    """Echelon-ordered basis of the right kernel over the function field"""
    if mat.rows == 0:
        return [[ONE_RF if i == j else ZERO_RF for i in range(mat.cols)] for j in range(mat.cols)]
    rows, _ = _cleared_rows(mat)
    reduced, pivots, _ = _echelon(rows, mat.cols)
    return _kernel_from_echelon(reduced, pivots, mat.cols)


def primitive_vector(vector: Sequence[RationalFunction]) -> List[Polynomial]:
    """
    Scale a nonzero vector to polynomials with content 1

    The first nonzero entry ends up with leading coefficient 1.
    """
    den = poly_lcm_all(v.den for v in vector)
    polys = [(v * RationalFunction(den)).num for v in vector]
    content = poly_gcd_all(polys)
    polys = [p.exact_div(content) for p in polys]
    lead = next(p.leading for p in polys if not p.is_zero)
    return [p / lead for p in polys]


def hermite_kernel_basis(mat) -> PolyMat:
    """
    Polynomial basis of the right kernel over the function field

    Columns are content free; an all-zero (or row-free) input gives the
    identity.
    """
    m = mat.cols
    if mat.rows == 0 or all(e.is_zero for row in mat.entries for e in row):
        return PolyMat.identity(m)
    columns = [primitive_vector(v) for v in right_kernel(mat)]
    return PolyMat.from_columns(columns, m)


def constant_kernel(values: Sequence[Sequence[GaussianRational]], ncols: int = None) -> List[List[GaussianRational]]:
    """Echelon-ordered nullspace basis of a constant matrix"""
    rows = [[Polynomial.of(v) for v in row] for row in values]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    reduced, pivots, _ = _echelon(rows, ncols)
    return [[e.constant_value for e in vec] for vec in _kernel_from_echelon(reduced, pivots, ncols)]


def conjugate_transpose(values: Sequence[Sequence[GaussianRational]]) -> List[List[GaussianRational]]:
    if not values:
        return []
    return [[values[i][j].conjugate() for i in range(len(values))] for j in range(len(values[0]))]


def maximal_minor_gcd(mat) -> Polynomial:
    """
    Monic gcd of the maximal (rows x rows) minors of a full-row-rank matrix

    Rows are cleared of denominators first, which multiplies every minor
    by the same polynomial.
    """
    rows, _ = _cleared_rows(mat)
    n = mat.rows
    cleared = PolyMat(n, mat.cols, tuple(tuple(row) for row in rows)).to_ratmat()
    result = ZERO_POLY
    for cols in combinations(range(mat.cols), n):
        minor = determinant(cleared.select_columns(cols))
        if minor.is_zero:
            continue
        result = poly_gcd(result, minor.num)
        if result.degree == 0:
            break
    if result.is_zero:
        raise ValueError("matrix does not have full row rank")
    return result


# -- interpolation modules ----------------------------------------------------

def _quotient_map(numerator: PolyMat, modulus: Polynomial) -> List[List[GaussianRational]]:
    """Matrix of x in C^(m d) -> coefficients of (B f mod p)"""
    d = modulus.degree
    columns = []
    for j in range(numerator.cols):
        for t in range(d):
            column = []
            for i in range(numerator.rows):
                remainder = numerator[i, j].shift(t) % modulus
                column.extend(remainder.coeff(k) for k in range(d))
            columns.append(column)
    return [[columns[c][r] for c in range(len(columns))] for r in range(numerator.rows * d)]


def interpolation_codimension(numerator: PolyMat, modulus: Polynomial) -> int:
    """Codimension of {f : B f = 0 mod p} in C[z]^m, by exact dimension count"""
    d = modulus.degree
    if d <= 0:
        return 0
    m = numerator.cols
    return m * d - len(constant_kernel(_quotient_map(numerator, modulus), m * d))


def _column_hermite(generators: List[List[Polynomial]], size: int) -> PolyMat:
    """Column Hermite form of the module spanned by the generators"""
    pending = [list(g) for g in generators if any(not p.is_zero for p in g)]
    basis: List[List[Polynomial]] = []
    for row in range(size):
        active = [g for g in pending if not g[row].is_zero]
        rest = [g for g in pending if g[row].is_zero]
        while len(active) > 1:
            active.sort(key=lambda g: g[row].degree)
            pivot = active[0]
            survivors = [pivot]
            for g in active[1:]:
                quotient = g[row] // pivot[row]
                g = [a - quotient * b for a, b in zip(g, pivot)]
                if g[row].is_zero:
                    rest.append(g)
                else:
                    survivors.append(g)
            active = survivors
        if not active:
            raise ValueError("module is not of full rank")
        pivot = active[0]
        lead = pivot[row].leading
        basis.append([p / lead for p in pivot])
        pending = [g for g in rest if any(not p.is_zero for p in g)]
    for j in range(size):
        for i in range(j + 1, size):
            diagonal = basis[i][i]
            quotient = basis[j][i] // diagonal
            if not quotient.is_zero:
                basis[j] = [a - quotient * b for a, b in zip(basis[j], basis[i])]
    return PolyMat.from_columns(basis, size)


def interpolation_module_basis(numerator: PolyMat, modulus: Polynomial) -> PolyMat:
    """
    Square basis G of {f in C[z]^m : B f = 0 mod p}

    Args:
        numerator: B, an n x m polynomial matrix
        modulus: p, nonzero with roots in the open disk

    Returns:
        G in column Hermite form (lower triangular, monic diagonal)
    """
    if modulus.is_zero:
        raise ValueError("modulus must be nonzero")
    p = modulus.monic()
    m = numerator.cols
    d = p.degree
    if d <= 0:
        return PolyMat.identity(m)
    solutions = constant_kernel(_quotient_map(numerator, p), m * d)
    generators = [[Polynomial(tuple(v[j * d:(j + 1) * d])) for j in range(m)] for v in solutions]
    generators += [[p if k == j else ZERO_POLY for k in range(m)] for j in range(m)]
    return _column_hermite(generators, m)


def verify_interpolation_basis(numerator: PolyMat, modulus: Polynomial, basis: PolyMat) -> bool:
    """B G = 0 mod p and p G^-1 polynomial"""
    product = numerator.to_ratmat() @ basis.to_ratmat()
    for row in product.entries:
        for e in row:
            if not (e.num % modulus).is_zero:
                return False
    cofactor = inverse(basis.to_ratmat()) * RationalFunction(modulus)
    return cofactor.is_polynomial


def column_reduce(mat: PolyMat) -> Tuple[PolyMat, Tuple[int, ...]]:
    """
    Column-reduced form of a nonsingular square polynomial matrix

    Returns:
        (reduced matrix generating the same module, its column degrees)
    """
    m = mat.cols
    cols = [list(mat.col(j)) for j in range(m)]
    while True:
        degrees = [max(p.degree for p in col) for col in cols]
        leading = [[cols[j][i].coeff(degrees[j]) for j in range(m)] for i in range(mat.rows)]
        null = constant_kernel(leading, m)
        if not null:
            break
        v = null[0]
        k = max((j for j in range(m) if not v[j].is_zero), key=lambda j: (degrees[j], j))
        combined = [ZERO_POLY] * mat.rows
        for j in range(m):
            if v[j].is_zero:
                continue
            for i in range(mat.rows):
                combined[i] = combined[i] + cols[j][i].shift(degrees[k] - degrees[j]) * v[j]
        cols[k] = [p / v[k] for p in combined]
    reduced = PolyMat.from_columns(cols, mat.rows)
    return reduced, tuple(int(d) for d in reduced.column_degrees())
