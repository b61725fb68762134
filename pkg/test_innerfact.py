"""
Test inner function certificates, Blaschke-Potapov peeling and inner-outer factorization
"""
from fractions import Fraction

import numpy as np
import pytest

from hankel_kernels.core.coefficients import GaussianRational, Polynomial, RationalFunction, ONE_RF, Z, ZERO_RF
from hankel_kernels.core.errors import CircleDegenerateError, DomainRejection, NotAnalyticError, PreconditionError
from hankel_kernels.core.innerfact import BPFactor, InnerFactorizer, MatrixInner
from hankel_kernels.core.polymat import RatMat, determinant, generic_rank
from hankel_kernels.core.worked_examples import (
    blaschke, diagonal_shift_column, double_zbar_kernel, random_square_inner, rank_two_matrix,
    signed_permutation, two_by_two_mixer,
)
from hankel_kernels.utils.numeric_harness import NumericHarness

HALF = Fraction(1, 2)
# zeros at -+1/sqrt(2), so z**2 - 1/2 is irreducible over Q(i)
ROOT_HALF_PAIR = RationalFunction(Polynomial((-HALF, 0, 1)), Polynomial((1, 0, -HALF)))


def quiet(message, level='INFO'):
    pass


@pytest.fixture
def factorizer():
    return InnerFactorizer(logger=quiet)


def test_mixer_is_inner(factorizer):
    assert factorizer.is_inner(two_by_two_mixer(Z))
    assert factorizer.certify(double_zbar_kernel())


def test_tagged_column_is_inner(factorizer):
    column = RatMat.column([Z, Z])
    assert factorizer.is_inner(column, [2])
    assert not factorizer.is_inner(column)
    assert factorizer.certify(diagonal_shift_column())


def test_non_inner_witnesses(factorizer):
    certificate = factorizer.is_inner(RatMat.column([Z, ONE_RF]))
    assert not certificate
    assert certificate.witness
    assert not factorizer.is_inner(RatMat.from_rows([[ONE_RF / Z]]))
    assert not factorizer.is_inner(RatMat.from_rows([[Z, Z]]))


def test_bp_extract_reassembles(factorizer):
    mat = RatMat.from_rows([[Z, ONE_RF], [ZERO_RF, Z - Fraction(1, 2)]])
    factor, rest = factorizer.bp_extract(mat, 0)
    assert factor.matrix() @ rest == mat
    assert factorizer.is_analytic(rest)
    assert determinant(rest).num.degree == determinant(mat).num.degree - 1


def test_bp_extract_needs_a_zero(factorizer):
    with pytest.raises(PreconditionError):
        factorizer.bp_extract(RatMat.identity(2), "1/3")
    with pytest.raises(PreconditionError):
        factorizer.bp_extract(RatMat.diagonal([Z, Z]), 1)


def test_inner_outer_of_rank_two_matrix(factorizer):
    mat = rank_two_matrix()
    result = factorizer.inner_outer(mat)
    assert (result.theta.rows, result.theta.cols) == (3, 2)
    assert result.rank == generic_rank(mat) == 2
    assert result.reassembled() == mat
    assert factorizer.certify(result.theta)


def test_inner_outer_numeric_reassembly(factorizer):
    mat = rank_two_matrix()
    result = factorizer.inner_outer(mat)
    harness = NumericHarness(samples=32, logger=quiet)
    summary = harness.numeric_crosscheck((mat, result))
    assert summary.passed
    assert summary.residuals["reassembly"] < 1e-8


def test_inner_outer_pulls_out_common_zero(factorizer):
    result = factorizer.inner_outer(RatMat.column([Z, Z]))
    assert result.theta.cols == 1
    assert factorizer.equal_up_to_right_unitary(result.theta, diagonal_shift_column()) is not None


def test_inner_outer_recovers_square_inner(factorizer):
    rng = np.random.default_rng(21)
    for _ in range(4):
        theta = random_square_inner(rng, 2, 2)
        result = factorizer.inner_outer(theta.mat)
        assert factorizer.equal_up_to_right_unitary(result.theta, theta) is not None
        assert result.outer.scaled.is_constant


def test_inner_outer_rejections(factorizer):
    with pytest.raises(DomainRejection):
        factorizer.inner_outer(RatMat.zeros(2, 2))
    with pytest.raises(NotAnalyticError):
        factorizer.inner_outer(RatMat.from_rows([[ONE_RF / Z]]))
    with pytest.raises(CircleDegenerateError):
        factorizer.inner_outer(RatMat.from_rows([[Z - 1]]))


def test_saturated_frame_of_generic_column(factorizer):
    frame = factorizer.saturated_frame(RatMat.column([ONE_RF, Z]))
    assert frame.cols == 1
    assert frame.tags == (Fraction(2),)
    assert factorizer.certify(frame)


def test_saturated_frame_full_rank_is_identity(factorizer):
    frame = factorizer.saturated_frame(RatMat.identity(2) * Z)
    assert frame.mat == RatMat.identity(2)


def test_equal_up_to_right_unitary(factorizer):
    mixer = double_zbar_kernel()
    swap = RatMat.from_rows([[0, 1], [1, 0]])
    swapped = MatrixInner(mixer.mat @ swap)
    match = factorizer.equal_up_to_right_unitary(swapped, mixer)
    assert match is not None
    assert np.allclose(match.unitary.conj().T @ match.unitary, np.eye(2))
    other = MatrixInner(RatMat.diagonal([Z, blaschke("1/2")]))
    assert factorizer.equal_up_to_right_unitary(other, mixer) is None


def test_tagged_and_untagged_column_match(factorizer):
    tagged = MatrixInner.tagged(RatMat.column([Z, Z]), [2])
    halves = MatrixInner.tagged(RatMat.column([Z * Fraction(1, 2), Z * Fraction(1, 2)]), [Fraction(1, 2)])
    assert factorizer.equal_up_to_right_unitary(tagged, halves) is not None


def test_non_inner_with_straddling_denominator(factorizer):
    certificate = factorizer.is_inner(RatMat.from_rows([[ONE_RF / (Z * Z - 3 * Z + 1)]]))
    assert not certificate
    assert "not analytic" in certificate.witness


def test_bp_factor_of_irreducible_quadratic():
    factor = BPFactor(None, (GaussianRational.of(1),), zero_poly=Polynomial((-HALF, 0, 1)))
    assert factor.degree == 2
    assert factor.alpha is None
    assert factor.matrix() == RatMat.from_rows([[ROOT_HALF_PAIR]])
    linear = BPFactor(None, (GaussianRational.of(1),), zero_poly=Polynomial((-HALF, 1)))
    assert linear.alpha == GaussianRational.of(HALF)


def test_inner_outer_peels_irreducible_factor_whole(factorizer):
    mat = RatMat.from_rows([[Z * Z - HALF]])
    result = factorizer.inner_outer(mat)
    assert result.reassembled() == mat
    assert factorizer.certify(result.theta)
    expected = MatrixInner(RatMat.from_rows([[ROOT_HALF_PAIR]]))
    assert factorizer.equal_up_to_right_unitary(result.theta, expected) is not None


def test_inner_outer_of_high_power(factorizer):
    mat = RatMat.from_rows([[Z ** 130]])
    result = factorizer.inner_outer(mat)
    assert result.reassembled() == mat
    assert factorizer.equal_up_to_right_unitary(result.theta, MatrixInner(mat)) is not None


def test_canonical_form_forgets_the_right_unitary(factorizer):
    rng = np.random.default_rng(5)
    for _ in range(4):
        theta = random_square_inner(rng, 2, 2)
        turned = MatrixInner(theta.mat @ signed_permutation(rng, 2))
        first, second = factorizer.canonical_form(theta), factorizer.canonical_form(turned)
        assert first.mat == second.mat
        assert first.tags == second.tags
        assert factorizer.certify(first)
        assert factorizer.equal_up_to_right_unitary(first, theta) is not None


def test_canonical_form_is_upper_triangular_at_the_base_point(factorizer):
    theta = MatrixInner(RatMat.diagonal([blaschke("1/2"), blaschke("-1/3")]))
    swapped = MatrixInner(theta.mat @ RatMat.from_rows([[0, 1], [1, 0]]))
    value = factorizer.canonical_form(swapped).mat.at(0)
    assert value[0][0] == 1 and value[1][1] == 1
    assert value[1][0] == 0
    # the mixer is singular at 0, so the next base point is used
    mixer = factorizer.canonical_form(double_zbar_kernel())
    assert factorizer.equal_up_to_right_unitary(mixer, double_zbar_kernel()) is not None
    empty = MatrixInner.empty(2)
    assert factorizer.canonical_form(empty) is empty


def test_right_unitary_equivalence_laws(factorizer):
    rng = np.random.default_rng(13)
    for _ in range(3):
        first = random_square_inner(rng, 2, 2)
        second = MatrixInner(first.mat @ signed_permutation(rng, 2))
        third = MatrixInner.tagged(second.mat @ signed_permutation(rng, 2) * 2, [4, 4])
        other = random_square_inner(rng, 2, 1)
        family = [first, second, third, other, MatrixInner(other.mat @ signed_permutation(rng, 2))]
        related = [[factorizer.equal_up_to_right_unitary(a, b) is not None for b in family]
                   for a in family]
        assert related[0][2] and related[3][4]
        assert not related[0][3]
        for i in range(len(family)):
            assert related[i][i]
            for j in range(len(family)):
                assert related[i][j] == related[j][i]
                for k in range(len(family)):
                    if related[i][j] and related[j][k]:
                        assert related[i][k]


def test_inner_numeric_identity():
    harness = NumericHarness(samples=256, logger=quiet)
    assert harness.inner_residual(double_zbar_kernel()) < 1e-10
    assert harness.inner_residual(diagonal_shift_column()) < 1e-10


def test_matrix_inner_json_shape():
    data = diagonal_shift_column().to_json()
    assert data["rows"] == 2 and data["cols"] == 1
    assert data["norms"] == [{"num": ["2"], "den": ["1"]}]


if __name__ == "__main__":
    print("=" * 70)
    print("INNER FUNCTION TESTS")
    print("=" * 70)
    raise SystemExit(pytest.main([__file__, "-v"]))
