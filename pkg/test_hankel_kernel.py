"""
Test block Hankel kernels of rational symbols and the finite-section oracle
"""
from fractions import Fraction

import numpy as np
import pytest

from hankel_kernels.core.coefficients import ONE_RF, Z, ZERO_RF
from hankel_kernels.core.errors import CirclePoleError, PreconditionError
from hankel_kernels.core.hankel_kernel import HankelKernelEngine, HankelSymbol
from hankel_kernels.core.innerfact import InnerFactorizer, MatrixInner
from hankel_kernels.core.polymat import PolyMat, RatMat
from hankel_kernels.core.worked_examples import (
    ZBAR, blaschke, conj, double_zbar_kernel, double_zbar_symbol, iz_symbol, random_square_inner,
    rational_kernel_corpus, two_column_closed_form, two_column_pairs, zbar,
)

HALF = Fraction(1, 2)


def quiet(message, level='INFO'):
    pass


@pytest.fixture(scope="module")
def engine():
    return HankelKernelEngine(InnerFactorizer(logger=quiet), logger=quiet)


def matches(engine, first, second):
    return engine.factorizer.equal_up_to_right_unitary(first, second) is not None


def test_double_zbar_kernel_is_the_mixer(engine):
    result = engine.kernel_rational(double_zbar_symbol())
    assert (result.theta.rows, result.theta.cols) == (2, 2)
    assert result.defect_dim == 1
    assert matches(engine, result.theta, double_zbar_kernel())


def test_two_column_closed_forms(engine):
    for theta, first, second in two_column_pairs():
        symbol = RatMat.from_rows([[conj(theta * first), conj(theta * second)]])
        result = engine.kernel_rational(symbol)
        assert matches(engine, result.theta, two_column_closed_form(theta, first, second))


def test_scalar_symbols(engine):
    result = engine.kernel_rational(RatMat.from_rows([[ZBAR]]))
    assert matches(engine, result.theta, MatrixInner(RatMat.from_rows([[Z]])))
    result = engine.kernel_rational(RatMat.from_rows([[zbar(3) * (Z + 5)]]))
    assert result.defect_dim == 3


def test_analytic_symbol_has_full_kernel(engine):
    result = engine.kernel_rational(RatMat.from_rows([[Z, ONE_RF], [ONE_RF / (Z - 3), ZERO_RF]]))
    assert result.defect_dim == 0
    assert matches(engine, result.theta, MatrixInner(RatMat.identity(2)))


def test_iz_symbol_kernel(engine):
    result = engine.kernel_rational(iz_symbol())
    assert result.defect_dim == 2
    assert matches(engine, result.theta, MatrixInner(RatMat.diagonal([Z, Z])))


def test_adjoint_round_trip(engine):
    rng = np.random.default_rng(3)
    for _ in range(5):
        size, degree = int(rng.integers(1, 4)), int(rng.integers(1, 5))
        theta = random_square_inner(rng, size, degree)
        result = engine.kernel_rational(theta.scaled_adjoint())
        assert result.defect_dim == degree
        assert matches(engine, result.theta, theta)


def test_kernel_is_shift_invariant(engine):
    for label, mat in rational_kernel_corpus():
        symbol = HankelSymbol(mat)
        theta = engine.kernel_rational(symbol).theta
        for j in range(theta.cols):
            column = theta.mat.submatrix(range(theta.rows), [j])
            assert engine.kernel_membership(symbol, column), label
            assert engine.kernel_membership(symbol, column * Z), label


def test_kernel_contains_blaschke_multiples(engine):
    for label, mat in rational_kernel_corpus():
        symbol = HankelSymbol(mat)
        b = symbol.blaschke.as_rational()
        for j in range(mat.cols):
            vector = RatMat.column([b if i == j else ZERO_RF for i in range(mat.cols)])
            assert engine.kernel_membership(symbol, vector), label


def test_scalar_symbol_is_conjugate_inner_times_invertible(engine):
    for zeros in ((0,), ("1/2", "-1/3i"), (0, 0, "1/2")):
        theta = blaschke(*zeros)
        for h in (ONE_RF, Z + 3, (2 * Z - 5) / (Z + 4)):
            result = engine.kernel_rational(RatMat.from_rows([[conj(theta) * h]]))
            assert result.defect_dim == len(zeros)
            assert matches(engine, result.theta, MatrixInner(RatMat.from_rows([[theta]])))


def test_kernel_with_irrational_disk_zeros(engine):
    # zeros at -+1/sqrt(2)
    theta = (Z * Z - HALF) / (Z * Z * (-HALF) + 1)
    result = engine.kernel_rational(RatMat.from_rows([[conj(theta)]]))
    assert result.defect_dim == 2
    assert matches(engine, result.theta, MatrixInner(RatMat.from_rows([[theta]])))


def test_kernel_of_high_antianalytic_power(engine):
    result = engine.kernel_rational(RatMat.from_rows([[zbar(130)]]))
    assert result.defect_dim == 130
    assert matches(engine, result.theta, MatrixInner(RatMat.from_rows([[Z ** 130]])))


def test_module_basis_scalar(engine):
    assert engine.module_basis(RatMat.from_rows([[ZBAR]])) == PolyMat(1, 1, ((Z.num,),))


def test_kernel_membership(engine):
    symbol = HankelSymbol(double_zbar_symbol())
    assert engine.kernel_membership(symbol, RatMat.column([ONE_RF, -ONE_RF]))
    assert engine.kernel_membership(symbol, RatMat.column([Z, ZERO_RF]))
    assert not engine.kernel_membership(symbol, RatMat.column([ONE_RF, ZERO_RF]))


def test_kernel_membership_preconditions(engine):
    symbol = HankelSymbol(double_zbar_symbol())
    with pytest.raises(PreconditionError):
        engine.kernel_membership(symbol, RatMat.column([ZBAR, ZERO_RF]))
    with pytest.raises(PreconditionError):
        engine.kernel_membership(symbol, RatMat.column([ONE_RF]))


def test_circle_pole_is_rejected(engine):
    with pytest.raises(CirclePoleError):
        engine.kernel_rational(RatMat.from_rows([[ONE_RF / (Z - 1)]]))


def test_finite_sections_of_double_zbar(engine):
    symbol = HankelSymbol(double_zbar_symbol())
    result = engine.kernel_rational(symbol)
    assert sorted(result.column_degrees) == [0, 1]
    assert engine.finite_section_kernel_dim(symbol, 0) == 1
    # degree-0 element (1, -1) plus (z, -z) and (z, 0)
    assert engine.finite_section_kernel_dim(symbol, 1) == 3
    assert result.predicted_section_dim(1) == 3


def test_finite_sections_match_column_degrees(engine):
    for label, mat in rational_kernel_corpus():
        symbol = HankelSymbol(mat)
        result = engine.kernel_rational(symbol)
        for d in range(7):
            assert engine.finite_section_kernel_dim(symbol, d) == result.predicted_section_dim(d), label


def test_finite_section_rejects_negative_degree(engine):
    with pytest.raises(PreconditionError):
        engine.finite_section_kernel_dim(double_zbar_symbol(), -1)


def test_shift_intertwining(engine):
    assert engine.intertwine_check(double_zbar_symbol(), 3)
    assert engine.intertwine_check(RatMat.from_rows([[zbar(2) + Z, ONE_RF / (2 * Z - 1)]]), 3)


if __name__ == "__main__":
    print("=" * 70)
    print("HANKEL KERNEL TESTS")
    print("=" * 70)
    raise SystemExit(pytest.main([__file__, "-v"]))
