"""
Analysis of rational functions on the unit circle

Partial-fraction split into analytic and antianalytic parts, exact Fourier
coefficients, finite Blaschke products and the scalar inner-outer and
GCD/LCM operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import mpmath

from . import roots
from .coefficients import (
    GaussianRational, Polynomial, RationalFunction,
    ONE, ZERO, ONE_POLY, ZERO_RF, poly_gcd, poly_lcm, poly_xgcd,
)
from .errors import (
    CircleDegenerateError, CirclePoleError, DomainRejection, InexactSplitError, NotAnalyticError,
)
from .roots import (
    CIRCLE, DISK_MARGIN, INSIDE, classify, disk_split, exact_roots, gaussian_factors,
    numeric_roots, root_locations, to_mpc,
)

Coefficient = Union[GaussianRational, complex]


def circle_adjoint(r: RationalFunction, margin: float = DISK_MARGIN) -> RationalFunction:
    """
    conj(r)(1/z), the function agreeing with conj(r(ζ)) on the circle

    Raises:
        CirclePoleError: If r has a pole on the unit circle
    """
    if CIRCLE in root_locations(r.den, margin):
        raise CirclePoleError(f"{r} has a pole on the unit circle")
    return r.adjoint()


def pole_split(r: RationalFunction, margin: float = DISK_MARGIN
               ) -> Tuple[RationalFunction, RationalFunction]:
    """
    Split r into (analytic, antianalytic)

    The analytic part has its poles outside the closed disk; the
    antianalytic part has its poles inside the open disk and vanishes at
    infinity. Their sum is r exactly.

    Raises:
        CirclePoleError: If r has a pole on the unit circle
        InexactSplitError: If an irreducible factor of the denominator has
            poles on both sides of the circle
    """
    if r.den.degree <= 0:
        return r, ZERO_RF
    split = disk_split(r.den, margin)
    if split.circle.degree > 0:
        raise CirclePoleError(f"{r} has a pole on the unit circle")
    inside, outside = split.inside, split.outside
    if inside.degree <= 0:
        return r, ZERO_RF
    if outside.degree <= 0:
        antianalytic = RationalFunction(r.num % r.den, r.den)
    else:
        # s*inside + t*outside = 1, so num/den = num*s/outside + num*t/inside
        _, _, t = poly_xgcd(inside, outside)
        antianalytic = RationalFunction((r.num * t) % inside, inside)
    return r - antianalytic, antianalytic


def taylor_coefficients(num: Polynomial, den: Polynomial, count: int) -> List[GaussianRational]:
    """First `count` Taylor coefficients at 0 of num/den (den(0) != 0)"""
    den0 = den.coeff(0)
    if den0.is_zero:
        raise ValueError("denominator vanishes at the origin")
    inverse = ONE / den0
    out: List[GaussianRational] = []
    for n in range(count):
        acc = num.coeff(n)
        for j in range(1, min(n, den.degree) + 1):
            acc = acc - den.coeff(j) * out[n - j]
        out.append(acc * inverse)
    return out


def _taylor_at(coeffs: Sequence, point, count: int) -> List:
    """First `count` Taylor coefficients about `point` (repeated synthetic division)"""
    work, out = list(coeffs), []
    for _ in range(count):
        if not work:
            out.append(mpmath.mpc(0))
            continue
        acc, partial = mpmath.mpc(0), []
        for c in reversed(work):
            acc = acc * point + c
            partial.append(acc)
        out.append(partial.pop())
        work = partial[::-1]
    return out


def _principal_part(num: Sequence, den: Sequence, pole, order: int) -> List:
    """beta_1..beta_order with num/den = sum beta_l (z - pole)^-l + analytic near pole"""
    top = _taylor_at(num, pole, order)
    bottom = _taylor_at(den, pole, 2 * order)[order:]
    series = []
    for n in range(order):
        acc = top[n] - sum((bottom[j] * series[n - j] for j in range(1, n + 1)), mpmath.mpc(0))
        series.append(acc / bottom[0])
    return [series[order - l] for l in range(1, order + 1)]


def numeric_fourier_coefficients(r: RationalFunction, low: int, high: int,
                                 margin: float = DISK_MARGIN) -> Dict[int, complex]:
    """
    Fourier coefficients of r from numeric partial fractions

    Used when the inside/outside split of the denominator is not defined
    over Q(i). Poles are the numeric roots of the exact irreducible factors
    of the denominator, so their orders are exact.

    Raises:
        CirclePoleError: If r has a pole on the unit circle
    """
    if CIRCLE in root_locations(r.den, margin):
        raise CirclePoleError(f"{r} has a pole on the unit circle")
    quotient, remainder = divmod(r.num, r.den)
    out: Dict[int, complex] = {k: complex(quotient.coeff(k)) if k >= 0 else 0j
                               for k in range(low, high + 1)}
    if remainder.is_zero:
        return out
    with mpmath.workdps(roots.WORKING_DPS):
        num = [to_mpc(c) for c in remainder.coeffs]
        den = [to_mpc(c) for c in r.den.coeffs]
        for factor, order in gaussian_factors(r.den):
            for pole in numeric_roots(factor):
                inside = classify(pole, margin) == INSIDE
                for l, beta in enumerate(_principal_part(num, den, pole, order), start=1):
                    for k in range(low, high + 1):
                        if inside and k <= -l:
                            term = mpmath.binomial(-k - 1, l - 1) * pole ** (-k - l)
                        elif not inside and k >= 0:
                            term = (-1) ** l * mpmath.binomial(k + l - 1, l - 1) * pole ** (-l - k)
                        else:
                            continue
                        out[k] += complex(beta * term)
    return out


def fourier_coefficients(r: RationalFunction, low: int, high: int,
                         margin: float = DISK_MARGIN) -> Dict[int, Coefficient]:
    """
    Fourier coefficients of r on the circle for low <= k <= high

    Nonnegative indices are Taylor coefficients of the analytic part;
    negative index -j is the j-th Taylor coefficient of the antianalytic
    part B evaluated at 1/w. The values are exact unless the denominator
    does not split over Q(i), in which case they are complex floats.
    """
    try:
        analytic, antianalytic = pole_split(r, margin)
    except InexactSplitError:
        return numeric_fourier_coefficients(r, low, high, margin)
    out: Dict[int, GaussianRational] = {}
    if high >= 0:
        series = taylor_coefficients(analytic.num, analytic.den, high + 1)
        for k in range(max(low, 0), high + 1):
            out[k] = series[k]
    if low < 0:
        top = min(high, -1)
        if antianalytic.is_zero:
            for k in range(low, top + 1):
                out[k] = ZERO
        else:
            gap = antianalytic.den.degree - antianalytic.num.degree
            num_w = antianalytic.num.reverse().shift(gap)
            den_w = antianalytic.den.reverse()
            series = taylor_coefficients(num_w, den_w, -low + 1)
            for k in range(low, top + 1):
                out[k] = series[-k]
    return out


def fourier_coefficient(r: RationalFunction, k: int, margin: float = DISK_MARGIN) -> Coefficient:
    return fourier_coefficients(r, k, k, margin)[k]


def is_analytic(r: RationalFunction, margin: float = DISK_MARGIN) -> bool:
    """True when every pole of r lies strictly outside the closed disk"""
    return not root_locations(r.den, margin) & {INSIDE, CIRCLE}


@dataclass(frozen=True)
class BlaschkeProduct:
    """
    Finite Blaschke product c * prod (z - a)/(1 - conj(a) z)

    zero_poly is the monic polynomial with the zeros (all in the open disk)
    and constant is an exact unimodular Gaussian rational.
    """

    zero_poly: Polynomial = ONE_POLY
    constant: GaussianRational = ONE

    def __post_init__(self):
        object.__setattr__(self, 'zero_poly', Polynomial.of(self.zero_poly).monic())
        constant = GaussianRational.of(self.constant)
        if constant.abs2() != 1:
            raise DomainRejection(f"Blaschke constant {constant} is not unimodular")
        object.__setattr__(self, 'constant', constant)

    @classmethod
    def from_zeros(cls, zeros: Iterable, constant=ONE) -> "BlaschkeProduct":
        """
        Build from exact zeros; each item is a point or (point, multiplicity)

        Raises:
            CircleDegenerateError: If a zero lies on the unit circle
            DomainRejection: If a zero lies outside the disk
        """
        poly = ONE_POLY
        for item in zeros:
            alpha, multiplicity = item if isinstance(item, tuple) else (item, 1)
            alpha = GaussianRational.of(alpha)
            modulus = alpha.abs2()
            if modulus == 1:
                raise CircleDegenerateError(f"Blaschke zero {alpha} lies on the unit circle",
                                            complex(alpha))
            if modulus > 1:
                raise DomainRejection(f"Blaschke zero {alpha} lies outside the unit disk")
            if multiplicity < 1:
                raise DomainRejection(f"multiplicity {multiplicity} of zero {alpha} is not positive")
            poly = poly * Polynomial((-alpha, ONE)) ** multiplicity
        return cls(poly, GaussianRational.of(constant))

    @classmethod
    def from_polynomial(cls, poly: Polynomial, constant=ONE,
                        margin: float = DISK_MARGIN) -> "BlaschkeProduct":
        """Build from a zero polynomial, checking its roots are in the disk"""
        split = disk_split(poly, margin)
        if split.circle.degree > 0:
            raise CircleDegenerateError("Blaschke zero on the unit circle", split.circle_witness())
        if split.outside.degree > 0:
            raise DomainRejection(f"{poly} has roots outside the unit disk")
        return cls(poly, GaussianRational.of(constant))

    @property
    def degree(self) -> int:
        return self.zero_poly.degree

    @property
    def zeros(self) -> List[Tuple[GaussianRational, int]]:
        return exact_roots(self.zero_poly)

    def as_rational(self) -> RationalFunction:
        return RationalFunction(self.zero_poly * self.constant, self.zero_poly.reflect())

    def __mul__(self, other: "BlaschkeProduct") -> "BlaschkeProduct":
        return BlaschkeProduct(self.zero_poly * other.zero_poly, self.constant * other.constant)

    def divides(self, other: "BlaschkeProduct") -> bool:
        return self.zero_poly.divides(other.zero_poly)

    def evaluate(self, z):
        return self.as_rational().evaluate(z)

    def __str__(self):
        if self.degree == 0:
            return str(self.constant)
        return str(self.as_rational())


def blaschke_factor(alpha) -> BlaschkeProduct:
    """B_a(z) = (z - a)/(1 - conj(a) z)"""
    return BlaschkeProduct.from_zeros([alpha])


def scalar_inner_outer(h: RationalFunction, margin: float = DISK_MARGIN
                       ) -> Tuple[BlaschkeProduct, RationalFunction]:
    """
    Factor an analytic rational h = b * outer

    Raises:
        DomainRejection: If h is zero
        NotAnalyticError: If h has a pole in the closed disk
        CircleDegenerateError: If h vanishes on the circle
    """
    if h.is_zero:
        raise DomainRejection("the zero function has no inner-outer factorization")
    if not is_analytic(h, margin):
        raise NotAnalyticError(f"{h} has a pole in the closed unit disk")
    split = disk_split(h.num, margin)
    if split.circle.degree > 0:
        raise CircleDegenerateError(f"{h} vanishes on the unit circle", split.circle_witness())
    inner = BlaschkeProduct(split.inside)
    outer = h * RationalFunction(inner.zero_poly.reflect(), inner.zero_poly)
    return inner, outer


def scalar_gcd_lcm(products: Sequence[BlaschkeProduct]) -> Tuple[BlaschkeProduct, BlaschkeProduct]:
    """Greatest common divisor and least common multiple, constants normalized to 1"""
    if not products:
        raise DomainRejection("scalar_gcd_lcm needs at least one Blaschke product")
    gcd = products[0].zero_poly
    lcm = products[0].zero_poly
    for b in products[1:]:
        gcd = poly_gcd(gcd, b.zero_poly)
        lcm = poly_lcm(lcm, b.zero_poly)
    return BlaschkeProduct(gcd), BlaschkeProduct(lcm)
