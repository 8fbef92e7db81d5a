import pytest
from hypothesis import given, strategies as st

from crystalcompress import matrix_a
from crystalcompress.cartan import RankSpec, Weight
from crystalcompress.crystal import explore_component, is_isomorphic
from crystalcompress.errors import ReductionViolated, SpecMismatch
from crystalcompress.expomatrix import ExpoMatrix, satisfies_staircase
from crystalcompress.monomial import Monomial

A1, A2, A3 = RankSpec("A", 1), RankSpec("A", 2), RankSpec("A", 3)

monos = st.builds(
    lambda spec, d: Monomial(spec, d),
    st.sampled_from([A2, A3]),
    st.dictionaries(st.tuples(st.integers(1, 2), st.integers(-3, 3)),
                    st.integers(-2, 2).filter(bool), max_size=6))


def test_expand_y():
    assert matrix_a.expand_y(A2, 2, 0, 1) == ExpoMatrix(A2, {(1, 1): 1, (2, 0): 1})
    assert matrix_a.expand_y(A2, 1, 0, -2) == ExpoMatrix(A2, {(2, -1): 2, (3, -2): 2})
    with pytest.raises(SpecMismatch):
        matrix_a.expand_y(RankSpec("C", 2), 1, 0, 1)


def test_full_diagonal_cancels():
    m = ExpoMatrix(A2, {(1, 2): 2, (2, 1): 1, (3, 0): 3})
    assert matrix_a.full_diagonals(m) == [3]
    assert matrix_a.reduce_a1(m) == ExpoMatrix(A2, {(1, 2): 1, (3, 0): 2})
    assert matrix_a.psi_inv(m) == matrix_a.psi_inv(matrix_a.reduce_a1(m))


def test_zero_and_single_column():
    assert matrix_a.compress(ExpoMatrix(A2)).is_zero()
    hw = matrix_a.psi(Monomial.highest(A2, (2, 1), slot=4))
    assert matrix_a.compress(hw) == hw
    assert matrix_a.is_n_member(hw) == (Weight(A2, (2, 1)), 4)


def test_lower_decompose_rejects_unreduced_width():
    # X_2(0) X_1(1) is a full diagonal in A1, so the staircase part spans two columns
    with pytest.raises(ReductionViolated):
        matrix_a.lower_decompose(ExpoMatrix(A1, {(2, 0): 1, (1, 1): 1}))


@given(monos)
def test_round_trip(m):
    assert matrix_a.psi_inv(matrix_a.psi(m)) == m
    assert matrix_a.is_reduced(matrix_a.psi(m))


@given(monos)
def test_crystal_agreement(m):
    x = matrix_a.psi(m)
    assert x.wt() == m.wt()
    for i in m.spec.indices:
        assert (x.phi(i), x.eps(i)) == (m.phi(i), m.eps(i))
        for op in ("f", "e"):
            a, b = getattr(m, op)(i), getattr(x, op)(i)
            assert (a is None) == (b is None)
            if a is not None:
                assert matrix_a.psi(a) == b


@given(monos)
def test_compression(m):
    trace = matrix_a.compress_trace(matrix_a.psi(m))
    k = trace[-1]
    assert matrix_a.is_n_member(k) is not None
    for step in trace:
        assert step.wt() == m.wt()
        assert all(step.phi(i) == m.phi(i) and step.eps(i) == m.eps(i) for i in m.spec.indices)
    for x in trace[:-1]:
        m1 = matrix_a.lower_decompose(x).m1
        assert satisfies_staircase(m1) and m1.width() <= m.spec.rank
    assert matrix_a.compress(k) == k


@given(monos, st.integers(-4, 4))
def test_kappa_shift_covariant(m, s):
    assert matrix_a.kappa(m.shift(s)) == matrix_a.kappa(m).shift(s)


def test_component_isomorphism_small():
    m = Monomial.parse(A2, "Y1(0)^2*Y2(1)^-1*Y1(3)^-1*Y2(3)")
    assert is_isomorphic(explore_component(m), explore_component(matrix_a.kappa(m)))
