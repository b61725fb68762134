"""
Test independency modulo the Nevanlinna class and symbolic kernels
"""
import numpy as np
import pytest

from hankel_kernels.core.coefficients import ONE_RF, Z
from hankel_kernels.core.errors import (
    AtomProductError, DependentSetError, PreconditionError, SingularMultiplierError, UnsupportedShapeError,
)
from hankel_kernels.core.innerfact import InnerFactorizer
from hankel_kernels.core.nmod import Atom, AtomFactory, IndependencyEngine, NSpanEntry, NSpanMatrix
from hankel_kernels.core.polymat import RatMat
from hankel_kernels.core.worked_examples import (
    ZBAR, blaschke, diagonal_shift_column, double_zbar_kernel, double_zbar_symbol, independency_corpus,
    lattice_example, scalar_pair, two_atom_symbol,
)


def quiet(message, level='INFO'):
    pass


@pytest.fixture(scope="module")
def engine():
    return IndependencyEngine(InnerFactorizer(logger=quiet), logger=quiet)


def matches(engine, first, second):
    return engine.factorizer.equal_up_to_right_unitary(first, second) is not None


def test_entry_arithmetic_merges_atoms():
    a, b = Atom("a"), Atom("b")
    entry = NSpanEntry.of(a) + NSpanEntry(ZBAR, ((b, Z),)) - NSpanEntry.of(a)
    assert entry.atoms == (b,)
    assert entry.rational == ZBAR
    assert (entry * Z).coefficient(b) == Z * Z
    assert NSpanEntry.of(a) - NSpanEntry.of(a) == NSpanEntry()


def test_atom_product_is_rejected():
    with pytest.raises(AtomProductError):
        NSpanEntry.of(Atom("a")) * NSpanEntry.of(Atom("b"))


def test_atom_factory_namespaces():
    factory = AtomFactory(namespace="lcm1.")
    assert [factory.fresh().id for _ in range(2)] == ["lcm1.a1", "lcm1.a2"]


def test_two_atom_symbol_is_fully_independent(engine):
    symbol = two_atom_symbol()
    assert engine.independency(symbol) == 2
    assert engine.maximal_independent_subset(symbol) == [0, 1]
    assert engine.kernel_symbolic(symbol).theta.cols == 0


def test_rational_symbol_has_independency_zero(engine):
    symbol = NSpanMatrix.from_ratmat(double_zbar_symbol())
    kernel = engine.kernel_symbolic(symbol)
    assert kernel.independency == 0
    assert matches(engine, kernel.theta, double_zbar_kernel())


def test_independency_corpus_size_law(engine):
    for symbol, r in independency_corpus():
        kernel = engine.kernel_symbolic(symbol)
        assert kernel.independency == r
        assert kernel.theta.cols == symbol.cols - r


def test_scalar_pair_kernels(engine):
    pair = scalar_pair()
    for symbol, expected in ((pair.phi, pair.phi_kernel), (pair.psi, pair.psi_kernel)):
        kernel = engine.kernel_symbolic(symbol)
        assert kernel.independency == 1
        assert matches(engine, kernel.theta, expected)


def test_lattice_example_independencies(engine):
    example = lattice_example()
    assert engine.independency(example.phi) == 1
    assert engine.independency(example.psi) == 1
    assert engine.independency(example.omega) == 2
    assert matches(engine, engine.kernel_symbolic(example.phi).theta, example.theta1)
    assert matches(engine, engine.kernel_symbolic(example.psi).theta, example.theta2)


def test_maximal_subset_skips_dependent_columns(engine):
    a = Atom("a")
    symbol = NSpanMatrix.from_rows([[a, NSpanEntry(ZBAR, ((a, Z),)), Atom("b")]])
    assert engine.maximal_independent_subset(symbol) == [0, 2]


def test_maximal_subset_size_ignores_column_order(engine):
    rng = np.random.default_rng(17)
    for symbol, r in independency_corpus(seed=19, count=8):
        for _ in range(3):
            permuted = symbol.select_columns([int(j) for j in rng.permutation(symbol.cols)])
            subset = engine.maximal_independent_subset(permuted)
            assert len(subset) == r
            assert engine.independency(permuted.select_columns(subset)) == r


def test_extend_independent(engine):
    base = NSpanMatrix.from_rows([[Atom("a1")]])
    pool = NSpanMatrix.from_rows([[Atom("a2"), Atom("a3")]])
    assert engine.extend_independent(base, pool) == [0]


def test_extend_independent_preconditions(engine):
    a = Atom("a")
    with pytest.raises(DependentSetError):
        engine.extend_independent(NSpanMatrix.from_rows([[ONE_RF]]),
                                  NSpanMatrix.from_rows([[a, Atom("b")]]))
    with pytest.raises(PreconditionError):
        engine.extend_independent(NSpanMatrix.from_rows([[a, Atom("b")]]),
                                  NSpanMatrix.from_rows([[a, Atom("c")]]))


def test_preservation_relations(engine):
    symbol = two_atom_symbol()
    right = engine.preservation_check(symbol, RatMat.diagonal([Z, blaschke("1/2")]), 'right')
    assert (right.relation, right.after, right.holds) == ('equal', 2, True)
    left = engine.preservation_check(symbol, RatMat.from_rows([[1, 0], [0, 1], [Z, 1]]), 'left')
    assert (left.relation, left.after, left.holds) == ('equal', 2, True)
    tall = engine.preservation_check(symbol, RatMat.from_rows([[1], [1]]), 'right')
    assert tall.relation == 'sandwich'
    assert (tall.lower, tall.after, tall.upper) == (1, 1, 2)


def test_equality_mode_needs_full_rank(engine):
    singular = RatMat.from_rows([[1, 1], [1, 1]])
    with pytest.raises(SingularMultiplierError):
        engine.mul_right(two_atom_symbol(), singular, mode='equality')
    with pytest.raises(SingularMultiplierError):
        engine.mul_left(singular, two_atom_symbol(), mode='equality')
    product = engine.mul_right(two_atom_symbol(), singular)
    assert engine.independency(product) == 1


def test_preservation_rejects_unknown_side(engine):
    with pytest.raises(ValueError):
        engine.preservation_check(two_atom_symbol(), RatMat.identity(2), 'middle')


def test_symbol_for_inner_round_trips(engine):
    for theta in (double_zbar_kernel(), diagonal_shift_column()):
        symbol = engine.symbol_for_inner(theta)
        assert engine.verify_symbol(theta, symbol)


def test_symbol_for_column_inner_solves_last_coordinate(engine):
    theta = diagonal_shift_column()
    symbol = engine.symbol_for_column_inner(theta, AtomFactory(prefix="s"))
    s1 = Atom("s1")
    assert (symbol.rows, symbol.cols) == (1, 2)
    assert symbol.atoms() == (s1,)
    assert symbol[0, 0] == NSpanEntry.of(s1)
    assert symbol[0, 1].rational == ONE_RF / Z
    assert symbol[0, 1].coefficient(s1) == -ONE_RF
    assert engine.verify_symbol(theta, symbol)
    with pytest.raises(UnsupportedShapeError):
        engine.symbol_for_column_inner(double_zbar_kernel())


def test_symbol_for_inner_rejects_wide_inner(engine):
    with pytest.raises(UnsupportedShapeError):
        engine.symbol_for_inner(lattice_example().theta1)


def test_iz_counterexample_samples_all_pass(engine):
    checks = engine.iz_counterexample_check()
    assert len(checks) == 5
    assert all(check.passed for check in checks)


def test_iz_check_skips_zero_coefficients(engine):
    checks = engine.iz_counterexample_check([((0, 1), (0, 0)), ((1, 1), (0, 0))])
    assert len(checks) == 1
    assert checks[0].kernel_defect == 1 and checks[0].iz_defect == 2


if __name__ == "__main__":
    print("=" * 70)
    print("NEVANLINNA INDEPENDENCY TESTS")
    print("=" * 70)
    raise SystemExit(pytest.main([__file__, "-v"]))
