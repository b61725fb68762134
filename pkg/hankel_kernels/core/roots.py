"""
Root localization relative to the unit circle

Numeric roots come from companion-matrix eigenvalues computed with mpmath
at high precision and are only used to decide on which side of the circle
a root lies. Whenever a polynomial has to be split between the two sides,
the split itself is done exactly by factoring over Q(i) with sympy.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple

import mpmath
import sympy

from .coefficients import (
    GaussianRational, Polynomial, RationalFunction, ONE, ONE_POLY,
)
from .errors import (
    CircleDegenerateError, InexactSplitError, InvariantViolation, IrrationalRootError,
)

DISK_MARGIN = 1e-9
WORKING_DPS = 60
SYMBOL_Z = sympy.Symbol('z')

INSIDE, CIRCLE, OUTSIDE = 'inside', 'circle', 'outside'


def _mpf(value: Fraction):
    return mpmath.mpf(value.numerator) / value.denominator


def to_mpc(value: GaussianRational):
    return mpmath.mpc(_mpf(value.re), _mpf(value.im))


def set_working_precision(dps: int):
    """Decimal digits used by every later numeric root computation"""
    global WORKING_DPS
    WORKING_DPS = int(dps)


def numeric_roots(p: Polynomial, dps: int = None) -> List:
    """
    Roots of p as mpmath complex numbers

    Uses the eigenvalues of the Frobenius companion matrix of the monic
    normalization of p.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no finite root set")
    n = p.degree
    if n <= 0:
        return []
    with mpmath.workdps(dps or WORKING_DPS):
        lead = to_mpc(p.leading)
        coeffs = [to_mpc(c) / lead for c in p.coeffs]
        if n == 1:
            return [-coeffs[0]]
        companion = mpmath.zeros(n, n)
        for i in range(1, n):
            companion[i, i - 1] = 1
        for i in range(n):
            companion[i, n - 1] = -coeffs[i]
        eigenvalues = mpmath.eig(companion, left=False, right=False)
        return list(eigenvalues)


def classify(root, margin: float = DISK_MARGIN) -> str:
    modulus = abs(root)
    if modulus < 1 - margin:
        return INSIDE
    if modulus > 1 + margin:
        return OUTSIDE
    return CIRCLE


@lru_cache(maxsize=4096)
def root_locations(p: Polynomial, margin: float = DISK_MARGIN) -> FrozenSet[str]:
    """Sides of the circle holding the roots of p (empty for constants)"""
    if p.degree <= 0:
        return frozenset()
    order = p.order
    if order:
        return root_locations(p.without_origin_root(), margin) | {INSIDE}
    return frozenset(classify(root, margin) for root in numeric_roots(p))


def to_sympy(p: Polynomial):
    expr = sympy.Integer(0)
    for power, c in enumerate(p.coeffs):
        coefficient = sympy.Rational(c.re.numerator, c.re.denominator) \
            + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)
        expr += coefficient * SYMBOL_Z ** power
    return expr


def gaussian_from_sympy(value) -> GaussianRational:
    """
    Convert an exact sympy number to a GaussianRational

    Raises:
        ValueError: If the value is not in Q(i)
    """
    real_part, imag_part = sympy.sympify(value).as_real_imag()
    real_part, imag_part = sympy.nsimplify(real_part), sympy.nsimplify(imag_part)
    if not (real_part.is_Rational and imag_part.is_Rational):
        raise ValueError(f"{value} is not a Gaussian rational")
    return GaussianRational(Fraction(int(real_part.p), int(real_part.q)),
                            Fraction(int(imag_part.p), int(imag_part.q)))


def from_sympy(expr, symbol=SYMBOL_Z) -> Polynomial:
    """Polynomial in `symbol` with Gaussian rational coefficients"""
    poly = sympy.Poly(sympy.expand(expr), symbol)
    return Polynomial(tuple(gaussian_from_sympy(c) for c in reversed(poly.all_coeffs())))


@lru_cache(maxsize=2048)
def gaussian_factors(p: Polynomial) -> Tuple[Tuple[Polynomial, int], ...]:
    """
    Monic irreducible factors of p over Q(i) with multiplicities

    Ordered by degree, then by their printed form, so results are stable.
    """
    if p.degree <= 0:
        return ()
    _, factors = sympy.factor_list(to_sympy(p), SYMBOL_Z, gaussian=True)
    out = []
    for expr, multiplicity in factors:
        factor = from_sympy(expr)
        if factor.degree > 0:
            out.append((factor.monic(), int(multiplicity)))
    return tuple(sorted(out, key=lambda fm: (fm[0].degree, str(fm[0]))))


@dataclass(frozen=True)
class DiskSplit:
    """Exact factorization p = lead * inside * circle * outside"""

    inside: Polynomial
    circle: Polynomial
    outside: Polynomial

    def circle_witness(self) -> Optional[complex]:
        if self.circle.degree <= 0:
            return None
        return complex(numeric_roots(self.circle)[0])


@lru_cache(maxsize=4096)
def disk_split(p: Polynomial, margin: float = DISK_MARGIN) -> DiskSplit:
    """
    Split the monic part of p by root location

    Raises:
        InexactSplitError: If an irreducible factor over Q(i) has roots
            strictly on both sides of the circle
    """
    if p.is_zero:
        raise ValueError("cannot split the zero polynomial")
    if p.degree <= 0:
        return DiskSplit(ONE_POLY, ONE_POLY, ONE_POLY)
    monic = p.monic()
    order = monic.order
    if order:
        rest = disk_split(monic.without_origin_root(), margin)
        return DiskSplit(rest.inside.shift(order), rest.circle, rest.outside)
    locations = {classify(root, margin) for root in numeric_roots(monic)}
    if len(locations) == 1:
        (where,) = locations
        return DiskSplit(**{slot: (monic if slot == where else ONE_POLY)
                            for slot in (INSIDE, CIRCLE, OUTSIDE)})

    parts = {INSIDE: ONE_POLY, CIRCLE: ONE_POLY, OUTSIDE: ONE_POLY}
    for factor, multiplicity in gaussian_factors(monic):
        where = {classify(root, margin) for root in numeric_roots(factor)}
        if CIRCLE in where:
            slot = CIRCLE
        elif len(where) > 1:
            raise InexactSplitError(
                f"factor {factor} has roots inside and outside the unit circle; "
                f"its split is not defined over the Gaussian rationals")
        else:
            (slot,) = where
        parts[slot] = parts[slot] * factor ** multiplicity
    split = DiskSplit(**parts)
    if split.inside * split.circle * split.outside != monic:
        raise InvariantViolation(f"factorization of {monic} does not reassemble")
    return split


def exact_roots(p: Polynomial) -> List[Tuple[GaussianRational, int]]:
    """
    Exact roots of p with multiplicities, sorted by (re, im)

    Raises:
        IrrationalRootError: If some root is not a Gaussian rational
    """
    if p.degree <= 0:
        return []
    monic = p.monic()
    factors = ((monic, 1),) if monic.degree == 1 else gaussian_factors(monic)
    roots = []
    for factor, multiplicity in factors:
        if factor.degree != 1:
            raise IrrationalRootError(f"factor {factor} has no Gaussian rational root")
        roots.append((-factor.coeff(0), multiplicity))
    return sorted(roots, key=lambda rk: (rk[0].re, rk[0].im))


def gaussian_disk_roots(p: Polynomial, margin: float = DISK_MARGIN):
    """
    Exact roots of p in the open unit disk

    Raises:
        CircleDegenerateError: If p vanishes on the circle
        IrrationalRootError: If an inside root is not Gaussian rational
    """
    split = disk_split(p, margin)
    if split.circle.degree > 0:
        raise CircleDegenerateError("zero on the unit circle", split.circle_witness())
    return exact_roots(split.inside)


def spectral_factor(weight: RationalFunction, margin: float = DISK_MARGIN):
    """
    Exact outer factor of a weight that is positive on the circle

    Finds g0 with all zeros and poles outside the closed disk and a rational
    t > 0 such that weight = t * g0 * adjoint(g0) exactly, so that |g|^2 =
    weight for g = sqrt(t) * g0.

    Returns:
        (g0, t), or None when the split of weight is not defined over Q(i)

    Raises:
        CircleDegenerateError: If weight vanishes or has a pole on the circle
        InvariantViolation: If weight is not positive on the circle
    """
    if weight.is_zero:
        raise ValueError("zero weight")
    if weight.is_constant:
        value = weight.constant_value
        if value.im != 0 or value.re <= 0:
            raise InvariantViolation(f"weight {value} is not positive")
        return RationalFunction(ONE_POLY), value.re
    try:
        num_split = disk_split(weight.num, margin)
        den_split = disk_split(weight.den, margin)
    except InexactSplitError:
        return None
    if num_split.circle.degree > 0:
        raise CircleDegenerateError("weight vanishes on the unit circle",
                                    num_split.circle_witness())
    if den_split.circle.degree > 0:
        raise CircleDegenerateError("weight has a pole on the unit circle",
                                    den_split.circle_witness())
    g0 = RationalFunction(num_split.outside, den_split.outside)
    at_one = weight(ONE)
    g_one = g0(ONE)
    if at_one.im != 0 or at_one.re <= 0:
        raise InvariantViolation(f"weight {weight} is not positive at z=1")
    scale = at_one.re / g_one.abs2()
    if g0 * g0.adjoint() * scale != weight:
        raise InvariantViolation(f"weight {weight} is not a squared modulus")
    return g0, scale


class NumericOuter:
    """Floating point outer function g with |g|^2 equal to a given weight"""

    def __init__(self, weight: RationalFunction, margin: float = DISK_MARGIN):
        self.zeros = [complex(r) for r in numeric_roots(weight.num)
                      if classify(r, margin) == OUTSIDE] if weight.num.degree > 0 else []
        self.poles = [complex(r) for r in numeric_roots(weight.den)
                      if classify(r, margin) == OUTSIDE] if weight.den.degree > 0 else []
        at_one = complex(weight(ONE))
        self.scale = (at_one.real / abs(self._shape(1.0)) ** 2) ** 0.5

    def _shape(self, z):
        value = 1.0 + 0j * z
        for root in self.zeros:
            value = value * (z - root)
        for root in self.poles:
            value = value / (z - root)
        return value

    def __call__(self, z):
        return self.scale * self._shape(z)
