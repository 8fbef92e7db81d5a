import random

import pytest

from crystalcompress import matrix_a, matrix_c
from crystalcompress.cartan import RankSpec, Weight
from crystalcompress.errors import NotInN
from crystalcompress.expomatrix import ExpoMatrix
from crystalcompress.monomial import Monomial
from crystalcompress.tableau import (ReversedTableau, format_tableau, omega, tableau_e_a,
                                     tableau_f_a, tableau_to_path)

from helpers import random_monomial

A2, A3, C2 = RankSpec("A", 2), RankSpec("A", 3), RankSpec("C", 2)


def test_rows_and_reading_word():
    t = ReversedTableau(A2, ((2,), (1, 3)))
    assert t.shape == (1, 2)
    assert t.columns() == [[2, 3], [1]]
    assert t.reading_word() == [2, 3, 1]
    assert format_tableau(t) == ". 2\n1 3"


def test_omega_layout():
    m = ExpoMatrix.from_rows(A2, [[1, 1], [1, 0], [0, 0]], 2)
    t = omega(m)
    assert t.rows == ((1,), (1, 2)) and t.shift == 2 and not t.unnormalized
    with pytest.raises(NotInN):
        omega(ExpoMatrix.from_rows(A2, [[1, 1], [0, 0], [0, 0]]))


def test_type_c_is_flagged():
    x = matrix_c.psi(Monomial.highest(C2, (1, 1)))
    t = omega(x)
    assert t.unnormalized
    assert t.wt() == Weight(C2, (1, 1))


def test_empty():
    t = omega(ExpoMatrix(A2))
    assert t.reading_word() == [] and format_tableau(t) == ""
    assert tableau_to_path(t).endpoint() == Weight.zero(A2)


def test_json_round_trip():
    t = ReversedTableau(C2, ((1,), (2, -2)), 3, True)
    assert ReversedTableau.from_json(C2, t.to_json()) == t


def test_signature_rule_small():
    t = ReversedTableau(A2, ((1, 2),))
    # word 2 1: the 1 is not cancelled, so f_1 changes it
    assert tableau_f_a(t, 1).rows == ((2, 2),)
    assert tableau_e_a(t, 1).rows == ((1, 1),)
    assert tableau_f_a(ReversedTableau(A2, ((3,),)), 1) is None
    with pytest.raises(ValueError):
        tableau_f_a(ReversedTableau(C2, ((1,),)), 1)


@pytest.mark.parametrize("spec", [A2, A3])
def test_signature_rule_intertwines(spec):
    rng = random.Random(11)
    for _ in range(150):
        x = matrix_a.compress(matrix_a.psi(random_monomial(rng, spec)))
        t = omega(x)
        for i in spec.indices:
            y = matrix_a.mat_f(x, i)
            u = tableau_f_a(t, i)
            assert (y is None) == (u is None)
            if y is not None:
                assert omega(y) == u
                assert tableau_e_a(u, i) == t


def test_path():
    t = ReversedTableau(A2, ((2,), (1, 3)))
    path = tableau_to_path(t)
    assert [v.beta for v in path.vertices()] == [(0, 0, 0), (0, 1, 0), (0, 1, 1), (0, 0, 0)]
    assert path.endpoint() == t.wt()
    assert path.to_json()["segments"] == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
