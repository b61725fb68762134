"""
Test exact scalars, rational functions and Blaschke products
"""
from fractions import Fraction

import numpy as np
import pytest

from hankel_kernels.core.circle_analysis import (
    BlaschkeProduct, blaschke_factor, circle_adjoint, fourier_coefficient, fourier_coefficients,
    is_analytic, pole_split, scalar_gcd_lcm, scalar_inner_outer,
)
from hankel_kernels.core.coefficients import (
    GaussianRational, Polynomial, RationalFunction, ONE_RF, Z, ZERO, ZERO_POLY, poly_gcd,
)
from hankel_kernels.core.errors import CircleDegenerateError, CirclePoleError, DomainRejection

HALF = Fraction(1, 2)


def linear(root) -> Polynomial:
    """z - root"""
    return Polynomial((-GaussianRational.of(root), 1))


def circle_points(count=16, seed=0):
    rng = np.random.default_rng(seed)
    return np.exp(1j * rng.uniform(0, 2 * np.pi, count))


def test_gaussian_rational_parse_and_format():
    value = GaussianRational.parse("1/2-1/3i")
    assert value == GaussianRational(HALF, Fraction(-1, 3))
    assert str(value) == "1/2-1/3i"
    assert GaussianRational.parse("i") == GaussianRational(0, 1)
    assert GaussianRational.parse("-i") == GaussianRational(0, -1)
    assert GaussianRational.parse("2/3i") == GaussianRational(0, Fraction(2, 3))
    with pytest.raises(ValueError):
        GaussianRational.parse("0.5")
    with pytest.raises(TypeError):
        GaussianRational.of(0.5)


def test_gaussian_rational_field_axioms():
    a, b, c = GaussianRational.parse("1/2+i"), GaussianRational.parse("-3/7"), GaussianRational.parse("2-5/3i")
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * (GaussianRational.of(1) / a) == GaussianRational.of(1)
    assert a.conjugate().conjugate() == a
    assert a.abs2() == Fraction(5, 4)


def test_zero_polynomial_is_empty():
    assert Polynomial((0, 0)).coeffs == ()
    assert Polynomial((0, 0)) == ZERO_POLY
    assert ZERO_POLY.degree == float("-inf")


def test_rational_function_is_reduced_with_monic_denominator():
    r = RationalFunction(Polynomial((0, 2)) * linear(HALF), Polynomial((0, 4)) * linear(3))
    assert r.den == linear(3)
    assert r.num == linear(HALF) * GaussianRational.of(HALF)


def test_circle_adjoint_of_z_is_inverse():
    assert circle_adjoint(Z) == ONE_RF / Z


def test_circle_adjoint_of_constant_is_conjugate():
    c = RationalFunction.constant("2-3i")
    assert circle_adjoint(c) == RationalFunction.constant("2+3i")


def test_circle_adjoint_matches_pointwise_conjugate():
    r = blaschke_factor(HALF).as_rational() * (Z + 3)
    s = circle_adjoint(r)
    for zeta in circle_points():
        assert abs(s.evaluate(zeta) - np.conj(r.evaluate(zeta))) < 1e-10
    assert circle_adjoint(s) == r


def test_circle_adjoint_is_anti_homomorphism():
    r = (Z - 2) / (Z + 5)
    s = RationalFunction.constant("i") * Z * Z + 1
    assert circle_adjoint(r * s) == circle_adjoint(r) * circle_adjoint(s)
    assert circle_adjoint(r + s) == circle_adjoint(r) + circle_adjoint(s)


def test_circle_adjoint_rejects_circle_pole():
    with pytest.raises(CirclePoleError):
        circle_adjoint(ONE_RF / (Z - 1))


def test_pole_split_partial_fractions():
    analytic_part = ONE_RF / (Z - 2)
    antianalytic_part = ONE_RF / Z
    analytic, antianalytic = pole_split(analytic_part + antianalytic_part)
    assert analytic == analytic_part
    assert antianalytic == antianalytic_part


def test_pole_split_polynomial_is_analytic():
    analytic, antianalytic = pole_split(Z ** 2)
    assert analytic == Z ** 2
    assert antianalytic.is_zero


def test_pole_split_residue_at_origin():
    r = (Z ** 2 + 1) / (Z * (Z - 3))
    analytic, antianalytic = pole_split(r)
    # residue at 0 is 1/(-3)
    assert antianalytic == RationalFunction.constant(Fraction(-1, 3)) / Z
    assert analytic + antianalytic == r
    for k in range(6):
        assert fourier_coefficient(antianalytic, k) == ZERO


def test_fourier_coefficients_of_monomials():
    assert fourier_coefficient(Z ** 3, 3) == GaussianRational.of(1)
    assert fourier_coefficient(Z ** 3, 2) == ZERO
    assert fourier_coefficient(ONE_RF / Z, -1) == GaussianRational.of(1)


def test_fourier_coefficients_geometric_series():
    r = ONE_RF / (1 - Z * HALF)
    coefficients = fourier_coefficients(r, -4, 8)
    for k in range(-4, 9):
        expected = GaussianRational.of(Fraction(1, 2 ** k)) if k >= 0 else ZERO
        assert coefficients[k] == expected


def test_fourier_coefficients_against_fft():
    r = (Z - 3) / ((Z - 4) * (2 * Z - 1))
    size = 1024
    grid = np.exp(2j * np.pi * np.arange(size) / size)
    spectrum = np.fft.fft(r.evaluate(grid)) / size
    exact = fourier_coefficients(r, -6, 6)
    for k in range(-6, 7):
        assert abs(spectrum[k % size] - complex(exact[k])) < 1e-8


def test_denominator_with_roots_on_both_sides():
    # roots (3 -+ sqrt 5)/2, one on each side of the circle, not in Q(i)
    r = ONE_RF / (Z * Z - 3 * Z + 1)
    s = circle_adjoint(r)
    for zeta in circle_points():
        assert abs(s.evaluate(zeta) - np.conj(r.evaluate(zeta))) < 1e-10
    assert not is_analytic(r)
    assert is_analytic(ONE_RF / (Z * Z - 5 * Z + 5))

    size = 1024
    grid = np.exp(2j * np.pi * np.arange(size) / size)
    spectrum = np.fft.fft(r.evaluate(grid)) / size
    coefficients = fourier_coefficients(r, -6, 6)
    for k in range(-6, 7):
        assert isinstance(coefficients[k], complex)
        assert abs(spectrum[k % size] - coefficients[k]) < 1e-8
    # residue at the inside root is 1/(a - b) = -1/sqrt(5)
    assert fourier_coefficient(r, -1) == pytest.approx(-1 / np.sqrt(5))


def test_blaschke_product_is_unimodular():
    b = BlaschkeProduct.from_zeros([HALF, (GaussianRational.parse("1/3i"), 2), 0])
    assert b.degree == 4
    values = b.evaluate(circle_points(64))
    assert np.max(np.abs(np.abs(values) - 1)) < 1e-10
    assert b.as_rational() * circle_adjoint(b.as_rational()) == ONE_RF


def test_blaschke_factor_convention():
    assert blaschke_factor(0).as_rational() == Z
    assert blaschke_factor(HALF).as_rational() == (Z - HALF) / (1 - Z * HALF)


def test_blaschke_zero_on_circle_is_rejected():
    with pytest.raises(CircleDegenerateError):
        BlaschkeProduct.from_zeros(["3/5+4/5i"])
    with pytest.raises(DomainRejection):
        BlaschkeProduct.from_zeros([2])


def test_scalar_inner_outer_collects_disk_zeros():
    inner, outer = scalar_inner_outer(Z ** 2 * (Z - 2))
    assert inner.zero_poly == Polynomial.monomial(2)
    assert outer == Z - 2


def test_scalar_inner_outer_of_one():
    inner, outer = scalar_inner_outer(ONE_RF)
    assert inner.degree == 0
    assert outer == ONE_RF


def test_scalar_inner_outer_mixed_zeros():
    h = (Z - HALF) * (Z - 3) / (Z - 4)
    inner, outer = scalar_inner_outer(h)
    assert [root for root, _ in inner.zeros] == [GaussianRational.of(HALF)]
    assert inner.as_rational() * outer == h


def test_scalar_inner_outer_rejects_circle_zero():
    with pytest.raises(CircleDegenerateError):
        scalar_inner_outer(Z - 1)


def test_scalar_gcd_lcm():
    z2, z3 = BlaschkeProduct.from_zeros([(0, 2)]), BlaschkeProduct.from_zeros([(0, 3)])
    gcd, lcm = scalar_gcd_lcm([z2, z3])
    assert gcd.zero_poly == z2.zero_poly
    assert lcm.zero_poly == z3.zero_poly

    b_half, b_third = blaschke_factor(HALF), blaschke_factor(Fraction(1, 3))
    gcd, lcm = scalar_gcd_lcm([b_half, b_third])
    assert gcd.degree == 0
    assert lcm.zero_poly == (b_half * b_third).zero_poly

    gcd, lcm = scalar_gcd_lcm([blaschke_factor(0) * b_half, blaschke_factor(0) * b_third])
    assert gcd.zero_poly == Polynomial.monomial(1)
    assert lcm.degree == 3
    for b in (blaschke_factor(0) * b_half, blaschke_factor(0) * b_third):
        assert gcd.divides(b) and b.divides(lcm)


def test_poly_gcd_is_monic_common_factor():
    a = linear(HALF) * linear(2)
    assert poly_gcd(a, linear(2) * linear(-1) * 5) == linear(2)
    assert poly_gcd(ZERO_POLY, a * 3) == a
    assert poly_gcd(ZERO_POLY, ZERO_POLY).is_zero


if __name__ == "__main__":
    print("=" * 70)
    print("EXACT COEFFICIENT TESTS")
    print("=" * 70)
    raise SystemExit(pytest.main([__file__, "-v"]))
