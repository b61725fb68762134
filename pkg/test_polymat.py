"""
Test exact polynomial and rational matrix algebra
"""
import numpy as np
import pytest

from hankel_kernels.core.coefficients import Polynomial, RationalFunction, ONE_POLY, ONE_RF, Z, ZERO_RF
from hankel_kernels.core.polymat import (
    PolyMat, RatMat, classical_adjoint, column_reduce, determinant, generic_rank,
    hermite_kernel_basis, interpolation_codimension, interpolation_module_basis, inverse,
    verify_interpolation_basis,
)
from hankel_kernels.core.worked_examples import blaschke, random_ratmat, rank_two_matrix

Z_POLY = Polynomial.monomial(1)


def test_generic_rank_of_rank_two_matrix():
    assert generic_rank(rank_two_matrix()) == 2


def test_generic_rank_identity_and_dependent_rows():
    assert generic_rank(RatMat.identity(3)) == 3
    assert generic_rank(RatMat.from_rows([[Z, Z ** 2], [Z ** 3, Z ** 4]])) == 1
    assert generic_rank(RatMat.zeros(2, 3)) == 0


def test_generic_rank_matches_svd_at_circle_points():
    rng = np.random.default_rng(1)
    mat = random_ratmat(rng, 3, 4, rank=2)
    for zeta in np.exp(1j * rng.uniform(0, 2 * np.pi, 5)):
        singular = np.linalg.svd(mat.evaluate(zeta), compute_uv=False)
        assert int(np.sum(singular > 1e-8 * singular[0])) == generic_rank(mat)


def test_classical_adjoint_of_constant_two_by_two():
    mat = RatMat.from_rows([[1, 2], [3, 4]])
    assert classical_adjoint(mat) == RatMat.from_rows([[4, -2], [-3, 1]])
    assert classical_adjoint(RatMat.identity(3)) == RatMat.identity(3)


def test_classical_adjoint_of_diagonal_inner():
    b = blaschke("1/2")
    mat = RatMat.diagonal([Z, b])
    adjugate = classical_adjoint(mat)
    assert adjugate == RatMat.diagonal([b, Z])
    assert mat @ adjugate == RatMat.identity(2) * determinant(mat)


def test_classical_adjoint_determinant_identity():
    rng = np.random.default_rng(2)
    mat = random_ratmat(rng, 3, 3)
    adjugate = classical_adjoint(mat)
    det = determinant(mat)
    assert mat @ adjugate == RatMat.identity(3) * det
    assert adjugate @ mat == RatMat.identity(3) * det
    assert determinant(adjugate) == det ** 2


def test_inverse_round_trip():
    mat = RatMat.from_rows([[Z, ONE_RF], [ZERO_RF, Z - 2]])
    assert mat @ inverse(mat) == RatMat.identity(2)


def test_hermite_kernel_basis_examples():
    basis = hermite_kernel_basis(RatMat.from_rows([[Z, Z]]))
    assert basis == PolyMat(2, 1, ((ONE_POLY,), (-ONE_POLY,)))

    basis = hermite_kernel_basis(RatMat.from_rows([[ONE_RF, -Z]]))
    assert basis == PolyMat(2, 1, ((Z_POLY,), (ONE_POLY,)))

    assert hermite_kernel_basis(RatMat.zeros(2, 2)) == PolyMat.identity(2)


def test_hermite_kernel_basis_annihilates_and_has_full_rank():
    rng = np.random.default_rng(4)
    mat = random_ratmat(rng, 2, 4, rank=2)
    basis = hermite_kernel_basis(mat)
    assert basis.cols == 4 - generic_rank(mat)
    assert (mat @ basis.to_ratmat()).is_zero
    assert generic_rank(basis.to_ratmat()) == basis.cols


def test_interpolation_module_basis_scalar():
    basis = interpolation_module_basis(PolyMat(1, 1, ((ONE_POLY,),)), Z_POLY)
    assert basis == PolyMat(1, 1, ((Z_POLY,),))


def test_interpolation_module_basis_two_coordinates():
    numerator = PolyMat(1, 2, ((ONE_POLY, ONE_POLY),))
    basis = interpolation_module_basis(numerator, Z_POLY)
    assert determinant(basis.to_ratmat()).num.degree == 1
    assert verify_interpolation_basis(numerator, Z_POLY, basis)
    assert interpolation_codimension(numerator, Z_POLY) == 1


def test_interpolation_module_basis_unit_numerator():
    numerator = PolyMat(1, 1, ((Polynomial((1, 1)),),))
    modulus = Polynomial.monomial(2)
    basis = interpolation_module_basis(numerator, modulus)
    assert basis == PolyMat(1, 1, ((modulus,),))
    assert interpolation_codimension(numerator, modulus) == 2


def test_interpolation_basis_degree_matches_codimension():
    numerator = PolyMat(2, 3, (
        (ONE_POLY, Polynomial((0, 2)), Polynomial((1, 0, 1))),
        (Polynomial((2, 1)), ONE_POLY, Polynomial(())),
    ))
    modulus = Polynomial.from_roots([0, "1/2", "1/2"])
    basis = interpolation_module_basis(numerator, modulus)
    assert verify_interpolation_basis(numerator, modulus, basis)
    assert determinant(basis.to_ratmat()).num.degree == interpolation_codimension(numerator, modulus)


def test_column_reduce_degrees():
    mat = PolyMat(2, 2, ((ONE_POLY, Z_POLY), (-ONE_POLY, Z_POLY)))
    reduced, degrees = column_reduce(mat)
    assert sorted(degrees) == [0, 1]
    assert generic_rank(reduced.to_ratmat()) == 2


if __name__ == "__main__":
    print("=" * 70)
    print("POLYNOMIAL MATRIX TESTS")
    print("=" * 70)
    raise SystemExit(pytest.main([__file__, "-v"]))
