"""
Test root location against the unit circle and exact splits over Q(i)
"""
from fractions import Fraction

import numpy as np
import pytest

from hankel_kernels.core.coefficients import GaussianRational, Polynomial, ONE_POLY, ONE_RF, Z
from hankel_kernels.core.errors import (
    CircleDegenerateError, InexactSplitError, InvariantViolation, IrrationalRootError,
)
from hankel_kernels.core.roots import (
    CIRCLE, INSIDE, OUTSIDE, NumericOuter, classify, disk_split, exact_roots,
    gaussian_disk_roots, gaussian_factors, numeric_roots, root_locations, spectral_factor,
)

HALF = Fraction(1, 2)


def linear(root) -> Polynomial:
    return Polynomial((-GaussianRational.of(root), 1))


def test_numeric_roots_and_classify():
    roots = sorted(complex(r).real for r in numeric_roots(linear(HALF) * linear(-2)))
    assert roots == pytest.approx([-2.0, 0.5])
    assert numeric_roots(Polynomial((3,))) == []
    assert classify(0.5) == INSIDE
    assert classify(1.0) == CIRCLE
    assert classify(1 + 1e-12) == CIRCLE
    assert classify(2.0) == OUTSIDE
    with pytest.raises(ValueError):
        numeric_roots(Polynomial(()))


def test_gaussian_factors_split_sum_of_squares():
    factors = gaussian_factors(Polynomial((1, 0, 1)))
    assert [f.degree for f, _ in factors] == [1, 1]
    assert all(m == 1 for _, m in factors)
    product = ONE_POLY
    for factor, _ in factors:
        product = product * factor
    assert product == Polynomial((1, 0, 1))


def test_disk_split_separates_sides():
    p = linear(HALF) * linear(2) * linear(GaussianRational.parse("i"))
    split = disk_split(p)
    assert split.inside == linear(HALF)
    assert split.outside == linear(2)
    assert split.circle == linear(GaussianRational.parse("i"))
    assert abs(split.circle_witness()) == pytest.approx(1.0)


def test_disk_split_single_side_keeps_irrational_roots():
    split = disk_split(Polynomial((-2, 0, 1)))
    assert split.outside == Polynomial((-2, 0, 1))
    assert split.inside == ONE_POLY
    assert split.circle_witness() is None


def test_disk_split_rejects_straddling_factor():
    with pytest.raises(InexactSplitError):
        disk_split(Polynomial((-1, 1, 1)))


def test_root_locations_without_a_split():
    assert root_locations(Polynomial((1, -3, 1))) == {INSIDE, OUTSIDE}
    assert root_locations(Polynomial.monomial(130)) == {INSIDE}
    assert root_locations(Polynomial((3,))) == frozenset()
    split = disk_split(Polynomial.monomial(3) * linear(2))
    assert split.inside == Polynomial.monomial(3)
    assert split.outside == linear(2)


def test_exact_roots_sorted_with_multiplicity():
    third_i = GaussianRational(0, Fraction(-1, 3))
    roots = exact_roots(linear(HALF) ** 2 * linear(third_i))
    assert roots == [(third_i, 1), (GaussianRational(HALF), 2)]
    with pytest.raises(IrrationalRootError):
        exact_roots(Polynomial((-2, 0, 1)))


def test_gaussian_disk_roots():
    assert gaussian_disk_roots(linear(0) * linear(3)) == [(GaussianRational(0), 1)]
    with pytest.raises(CircleDegenerateError):
        gaussian_disk_roots(Polynomial((-1, 0, 1)))


def test_spectral_factor_recovers_outer_polynomial():
    g = Z - 2
    weight = g * g.adjoint()
    g0, scale = spectral_factor(weight)
    assert g0 == g
    assert scale == 1
    assert g0 * g0.adjoint() * scale == weight


def test_spectral_factor_constants_and_failures():
    g0, scale = spectral_factor(ONE_RF * 3)
    assert g0 == ONE_RF and scale == 3
    with pytest.raises(InvariantViolation):
        spectral_factor(ONE_RF * -1)
    with pytest.raises(CircleDegenerateError):
        spectral_factor((Z - 1) * (Z - 1).adjoint())

    p = Z * Z + Z - 1
    assert spectral_factor(p * p.adjoint()) is None


def test_numeric_outer_matches_weight_on_circle():
    g = Z - 2
    outer = NumericOuter(g * g.adjoint())
    points = np.exp(1j * np.linspace(0, 2 * np.pi, 12, endpoint=False))
    assert np.allclose(np.abs(outer(points)) ** 2, np.abs(points - 2) ** 2)


if __name__ == "__main__":
    print("=" * 70)
    print("ROOT LOCATION TESTS")
    print("=" * 70)
    raise SystemExit(pytest.main([__file__, "-v"]))
