"""
Worked examples

Symbols and inner functions with known kernels, plus seeded random
corpora. The self-test and the test-suite both draw from here.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .circle_analysis import BlaschkeProduct
from .coefficients import GaussianRational, Polynomial, RationalFunction, ONE_RF, ZERO_RF, Z
from .innerfact import BPFactor, MatrixInner
from .nmod import Atom, NSpanEntry, NSpanMatrix
from .polymat import RatMat, generic_rank

HALF = Fraction(1, 2)
ZBAR = RationalFunction(Polynomial.of(1), Polynomial.monomial(1))


def zbar(power: int = 1) -> RationalFunction:
    return ZBAR ** power


def blaschke(*zeros) -> RationalFunction:
    """Blaschke product with the given zeros as a rational function"""
    return BlaschkeProduct.from_zeros(list(zeros)).as_rational()


def conj(r: RationalFunction) -> RationalFunction:
    """Boundary conjugate of a rational function"""
    return r.adjoint()


def two_by_two_mixer(theta: RationalFunction) -> RatMat:
    """[[theta/2 - 1/2, theta/2 + 1/2], [theta/2 + 1/2, theta/2 - 1/2]]"""
    minus = (theta - ONE_RF) * HALF
    plus = (theta + ONE_RF) * HALF
    return RatMat.from_rows([[minus, plus], [plus, minus]])


# -- scalar and 2x2 examples ------------------------------------------------

def double_zbar_symbol() -> RatMat:
    """[zbar, zbar]"""
    return RatMat.from_rows([[ZBAR, ZBAR]])


def double_zbar_kernel() -> MatrixInner:
    return MatrixInner(two_by_two_mixer(Z))


def diagonal_shift_column() -> MatrixInner:
    """(z, z)^t / sqrt(2)"""
    return MatrixInner.tagged(RatMat.column([Z, Z]), [2])


def two_column_closed_form(theta: RationalFunction, first: RationalFunction,
                           second: RationalFunction) -> MatrixInner:
    """Kernel inner of [conj(theta first), conj(theta second)] for coprime first, second"""
    return MatrixInner(RatMat.diagonal([first, second]) @ two_by_two_mixer(theta))


def two_column_pairs() -> List[Tuple[RationalFunction, RationalFunction, RationalFunction]]:
    """(theta, first', second') with coprime primed parts"""
    return [
        (blaschke(0), blaschke(HALF), blaschke(Fraction(1, 3))),
        (blaschke(HALF), blaschke(0), blaschke(-HALF)),
        (blaschke(0, 0), ONE_RF, blaschke(GaussianRational(0, HALF))),
        (blaschke(0, Fraction(1, 3)), blaschke(HALF), ONE_RF),
        (blaschke(GaussianRational(HALF, HALF)), blaschke(Fraction(-1, 3)), blaschke(Fraction(1, 4), 0)),
    ]


def rank_two_matrix() -> RatMat:
    """Rank 2 polynomial matrix with three rows"""
    z2, z3 = Z ** 2, Z ** 3
    return RatMat.from_rows([
        [ONE_RF, ONE_RF, Z, z2],
        [ONE_RF, Z, z2, z3],
        [ONE_RF, ZERO_RF, ZERO_RF, ZERO_RF],
    ])


def iz_symbol() -> RatMat:
    return RatMat.diagonal([ZBAR, ZBAR])


# -- N-span examples --------------------------------------------------------

def two_atom_symbol() -> NSpanMatrix:
    """[[u1, u2], [0, 0]] with u1 = z^(1/2), u2 = B_(1/2)^(1/2) as atoms"""
    u1, u2 = Atom("sqrtB(0)"), Atom("sqrtB(1/2)")
    return NSpanMatrix.from_rows([[u1, u2], [0, 0]])


@dataclass(frozen=True, eq=False)
class ScalarPair:
    """The 2-coordinate symbols sharing an atom a"""

    theta1: RationalFunction
    theta2: RationalFunction
    phi: NSpanMatrix
    psi: NSpanMatrix
    phi_kernel: MatrixInner
    psi_kernel: MatrixInner


def scalar_pair() -> ScalarPair:
    """
    Phi = [[a conj(t1), -a conj(t2)], [conj(t1), 0]] and Psi = [a, conj(t2)(1 - a t2)]

    ker H_Phi = (t1, t2)^t H^2 / sqrt(2). Since conj(t2) t2 = 1 on the
    circle, Psi = [a, conj(t2) - a] and ker H_Psi = (t2, t2)^t H^2 / sqrt(2).
    """
    a = Atom("a")
    t1, t2 = blaschke(0, HALF), blaschke(0, Fraction(1, 3))
    phi = NSpanMatrix.from_rows([
        [NSpanEntry(ZERO_RF, ((a, conj(t1)),)), NSpanEntry(ZERO_RF, ((a, -conj(t2)),))],
        [conj(t1), 0],
    ])
    psi_second = NSpanEntry(conj(t2), ((a, -(conj(t2) * t2)),))
    psi = NSpanMatrix.from_rows([[a, psi_second]])
    return ScalarPair(
        t1, t2, phi, psi,
        MatrixInner.tagged(RatMat.column([t1, t2]), [2]),
        MatrixInner.tagged(RatMat.column([t2, t2]), [2]),
    )


@dataclass(frozen=True, eq=False)
class LatticeExample:
    """Two 3-coordinate symbols, their kernels, LCM and the stacked symbol"""

    thetas: Tuple[RationalFunction, ...]
    phi: NSpanMatrix
    psi: NSpanMatrix
    theta1: MatrixInner
    theta2: MatrixInner
    lcm: MatrixInner

    @property
    def omega(self) -> NSpanMatrix:
        return NSpanMatrix.vstack([self.phi, self.psi])


def lattice_example() -> LatticeExample:
    """
    Phi = [[a1, 0, 0], [0, conj(t1), 0], [0, 0, conj(t2)]] and
    Psi = [[a2, a2, 0], [0, conj(t3), 0], [0, 0, conj(t4)]]
    """
    a1, a2 = Atom("a1"), Atom("a2")
    t1, t2, t3, t4 = blaschke(HALF), blaschke(0, Fraction(1, 3)), blaschke(-HALF), blaschke(0, 0)
    phi = NSpanMatrix.from_rows([[a1, 0, 0], [0, conj(t1), 0], [0, 0, conj(t2)]])
    psi = NSpanMatrix.from_rows([[a2, a2, 0], [0, conj(t3), 0], [0, 0, conj(t4)]])
    theta1 = MatrixInner(RatMat.from_rows([[ZERO_RF, ZERO_RF], [t1, ZERO_RF], [ZERO_RF, t2]]))
    theta2 = MatrixInner.tagged(RatMat.from_rows([[-t3, ZERO_RF], [t3, ZERO_RF], [ZERO_RF, t4]]), [2, 1])
    lcm_t2_t4 = BlaschkeProduct.from_zeros([0, 0, Fraction(1, 3)]).as_rational()
    lcm = MatrixInner(RatMat.column([ZERO_RF, ZERO_RF, lcm_t2_t4]))
    return LatticeExample((t1, t2, t3, t4), phi, psi, theta1, theta2, lcm)


# -- seeded corpora ---------------------------------------------------------

def random_disk_point(rng: np.random.Generator) -> GaussianRational:
    """Gaussian rational with |alpha| < 1 and a small denominator"""
    while True:
        q = int(rng.integers(2, 6))
        a, b = (int(v) for v in rng.integers(-q + 1, q, size=2))
        if a * a + b * b < q * q:
            return GaussianRational(Fraction(a, q), Fraction(b, q))


def random_square_inner(rng: np.random.Generator, size: int, degree: int) -> MatrixInner:
    """Product of `degree` Blaschke-Potapov factors with random zeros and directions"""
    mat = RatMat.identity(size)
    for _ in range(degree):
        vector = [0] * size
        while not any(vector):
            vector = [int(v) for v in rng.integers(-2, 3, size=size)]
        factor = BPFactor(random_disk_point(rng), tuple(GaussianRational.of(v) for v in vector))
        mat = mat @ factor.matrix()
    return MatrixInner(mat)


def random_rational(rng: np.random.Generator) -> RationalFunction:
    """(a + b z) / (3 + c z): nonzero, poles off the closed disk"""
    a, b = 0, 0
    while a == 0 and b == 0:
        a, b = (int(v) for v in rng.integers(-3, 4, size=2))
    c = int(rng.integers(-2, 3))
    return RationalFunction(Polynomial((GaussianRational.of(a), GaussianRational.of(b))),
                            Polynomial((GaussianRational.of(3), GaussianRational.of(c))))


def random_ratmat(rng: np.random.Generator, rows: int, cols: int,
                  rank: Optional[int] = None) -> RatMat:
    """Random rational matrix of the requested generic rank (full by default)"""
    target = min(rows, cols) if rank is None else rank
    while True:
        left = RatMat.from_rows([[random_rational(rng) for _ in range(target)] for _ in range(rows)])
        right = RatMat.from_rows([[random_rational(rng) for _ in range(cols)] for _ in range(target)])
        mat = left @ right
        if generic_rank(mat) == target:
            return mat


def random_nspan(rng: np.random.Generator, rows: int, cols: int, atoms: int) -> NSpanMatrix:
    """Rational parts plus random atom coefficients over `atoms` atoms"""
    pool = [Atom(f"u{k + 1}") for k in range(atoms)]
    entries = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            terms = tuple((atom, random_rational(rng)) for atom in pool if rng.random() < 0.6)
            rational = random_rational(rng) if rng.random() < 0.5 else ZERO_RF
            row.append(NSpanEntry(rational, terms))
        entries.append(row)
    return NSpanMatrix.from_rows(entries)


def signed_permutation(rng: np.random.Generator, size: int) -> RatMat:
    order = rng.permutation(size)
    signs = [GaussianRational.of(s) for s in ("1", "-1", "i", "-i")]
    rows = [[ZERO_RF] * size for _ in range(size)]
    for i, j in enumerate(order):
        rows[i][int(j)] = RationalFunction.constant(signs[int(rng.integers(0, 4))])
    return RatMat.from_rows(rows)


def unipotent_polynomial(rng: np.random.Generator, size: int) -> RatMat:
    """I plus a random strictly upper triangular polynomial part (det = 1)"""
    rows = [[ONE_RF if i == j else ZERO_RF for j in range(size)] for i in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            a, b = (int(v) for v in rng.integers(-2, 3, size=2))
            rows[i][j] = RationalFunction(Polynomial((GaussianRational.of(a), GaussianRational.of(b))))
    return RatMat.from_rows(rows)


def independency_corpus(seed: int = 7, count: int = 20) -> List[Tuple[NSpanMatrix, int]]:
    """
    Symbols with known independency r

    A diagonal atom seed with r atoms and some antianalytic rational
    entries is multiplied on the left by a unipotent polynomial matrix and
    on the right by a signed permutation; both preserve independency.
    """
    rng = np.random.default_rng(seed)
    corpus = []
    for index in range(count):
        m = int(rng.integers(1, 5))
        r = int(rng.integers(0, m + 1))
        n = int(rng.integers(max(r, 1), max(r, 1) + 2))
        rows = [[NSpanEntry() for _ in range(m)] for _ in range(n)]
        for j in range(r):
            rows[j][j] = NSpanEntry(zbar(1) if index % 2 else ZERO_RF, ((Atom(f"c{j + 1}"), ONE_RF),))
        if r < m:
            rows[0][r] = NSpanEntry(zbar(int(rng.integers(1, 3))))
        for j in range(r + 1, m):
            rows[int(rng.integers(0, n))][j] = NSpanEntry(RationalFunction(
                Polynomial((GaussianRational.of(int(rng.integers(-2, 3))), GaussianRational.of(1)))))
        seed_symbol = NSpanMatrix.from_rows(rows)
        left = unipotent_polynomial(rng, n)
        right = signed_permutation(rng, m)
        symbol = _times(left, _times_right(seed_symbol, right))
        corpus.append((symbol, r))
    return corpus


def _times_right(symbol: NSpanMatrix, mat: RatMat) -> NSpanMatrix:
    return NSpanMatrix.from_rows([
        [sum((symbol[i, k] * mat[k, j] for k in range(symbol.cols)), NSpanEntry())
         for j in range(mat.cols)] for i in range(symbol.rows)])


def _times(mat: RatMat, symbol: NSpanMatrix) -> NSpanMatrix:
    return NSpanMatrix.from_rows([
        [sum((symbol[k, j] * mat[i, k] for k in range(symbol.rows)), NSpanEntry())
         for j in range(symbol.cols)] for i in range(mat.rows)])


def cyclic_corpus(seed: int = 11, count: int = 20) -> List[RatMat]:
    """Random analytic rational vectors with 1 to 3 coordinates"""
    rng = np.random.default_rng(seed)
    vectors = []
    for _ in range(count):
        n = int(rng.integers(1, 4))
        entries = []
        for _ in range(n):
            coeffs = [int(v) for v in rng.integers(-3, 4, size=int(rng.integers(1, 4)))]
            if not any(coeffs):
                coeffs[0] = 1
            entries.append(RationalFunction(Polynomial(tuple(GaussianRational.of(c) for c in coeffs))))
        vectors.append(RatMat.column(entries))
    return vectors


def rational_kernel_corpus() -> List[Tuple[str, RatMat]]:
    """Rational symbols whose kernels have Gaussian rational data"""
    pairs = two_column_pairs()
    corpus = [
        ("zbar", RatMat.from_rows([[ZBAR]])),
        ("zbar^2", RatMat.from_rows([[zbar(2)]])),
        ("[zbar, zbar]", double_zbar_symbol()),
        ("I_zbar", iz_symbol()),
        ("analytic identity", RatMat.identity(2)),
        ("[zbar, zbar^2]", RatMat.from_rows([[ZBAR, zbar(2)]])),
    ]
    for k, (theta, first, second) in enumerate(pairs):
        corpus.append((f"pair {k + 1}", RatMat.from_rows([[conj(theta * first), conj(theta * second)]])))
    corpus.append(("adjoint of the [zbar, zbar] kernel", double_zbar_kernel().scaled_adjoint()))
    return corpus
