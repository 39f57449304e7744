from fractions import Fraction

import pytest

from cambrian import field as F
from cambrian.cartan import (CoxeterMatrix, DeltaConflict, NotCartan, NotSymmetrizable,
                             UnsupportedLabel, coxeter_components, simple_conjugacy_classes,
                             standard_crystallographic_cartan, validate_cartan)

PQ = CoxeterMatrix.from_edges("pq", {("p", "q"): 4})
PQ3 = CoxeterMatrix.from_edges("pq", {("p", "q"): 3})


def test_diagonal_must_be_two():
    with pytest.raises(NotCartan) as err:
        validate_cartan([[2, -1], [-2, 1]], PQ)
    assert err.value.condition == "i"


def test_wrong_product():
    with pytest.raises(NotCartan) as err:
        validate_cartan([[2, -1], [-1, 2]], PQ)
    assert err.value.condition == "ii"


def test_positive_entry():
    with pytest.raises(NotCartan) as err:
        validate_cartan([[2, 1], [2, 2]], PQ)
    assert err.value.condition == "ii"


def test_zero_pattern():
    m = CoxeterMatrix.from_edges("pq", {})
    with pytest.raises(NotCartan) as err:
        validate_cartan([[2, 0], [-1, 2]], m)
    assert err.value.condition == "iii"


def test_infinite_label_needs_product_at_least_four():
    m = CoxeterMatrix.from_edges("pq", {("p", "q"): 0})
    validate_cartan([[2, -1], [-4, 2]], m)
    validate_cartan([[2, -3], [-3, 2]], m)
    with pytest.raises(NotCartan):
        validate_cartan([[2, -1], [-3, 2]], m)


def test_not_symmetrizable_cycle():
    m = CoxeterMatrix.from_edges("pqr", {("p", "q"): 0, ("q", "r"): 0, ("p", "r"): 0})
    A = [[2, -1, -4], [-4, 2, -1], [-1, -4, 2]]
    with pytest.raises(NotSymmetrizable):
        validate_cartan(A, m)


def test_delta_conflict_on_conjugate_generators():
    with pytest.raises(DeltaConflict):
        validate_cartan([[2, Fraction(-1, 2)], [-2, 2]], PQ3)


def test_asymmetric_golden_entries_conflict():
    m = CoxeterMatrix.from_edges("pq", {("p", "q"): 5})
    big = F.surd(Fraction(-3, 2), Fraction(-1, 2), 5)
    with pytest.raises(DeltaConflict):
        validate_cartan([[2, -1], [big, 2]], m)


def test_unsupported_label():
    m = CoxeterMatrix.from_edges("pq", {("p", "q"): 7})
    with pytest.raises(UnsupportedLabel):
        standard_crystallographic_cartan(m)


def test_m5_product_is_four_cos_squared():
    m = CoxeterMatrix.from_edges("pq", {("p", "q"): 5})
    data = standard_crystallographic_cartan(m)
    prod = data.A[0][1] * data.A[1][0]
    assert prod == F.surd(Fraction(3, 2), Fraction(1, 2), 5)
    assert abs(F.to_float(prod) - 4 * 0.8090169943749475 ** 2) < 1e-12


def test_b2_delta_ratio():
    data = standard_crystallographic_cartan(PQ)
    dp, dq = data.delta
    assert dp == 2 * dq  # a_pq = -1, a_qp = -2: p is the long root
    for i in range(2):
        for j in range(2):
            assert data.delta[i] * data.A[i][j] == data.delta[j] * data.A[j][i]


def test_delta_override():
    data = validate_cartan([[2, -2], [-1, 2]], PQ, {"p": Fraction(1, 2), "q": 1})
    assert data.delta == (Fraction(1, 2), 1)
    with pytest.raises(NotSymmetrizable):
        validate_cartan([[2, -2], [-1, 2]], PQ, {"p": 1, "q": 1})


def test_conjugacy_classes():
    b3 = CoxeterMatrix.from_edges("pqr", {("p", "q"): 4, ("q", "r"): 3})
    assert sorted(map(sorted, simple_conjugacy_classes(b3))) == [["p"], ["q", "r"]]
    g2 = CoxeterMatrix.from_edges("rst", {("r", "s"): 6, ("s", "t"): 3})
    assert sorted(map(sorted, simple_conjugacy_classes(g2))) == [["r"], ["s", "t"]]


def test_components_normalized_separately():
    m = CoxeterMatrix.from_edges("pqrs", {("p", "q"): 4, ("r", "s"): 6})
    assert sorted(map(sorted, coxeter_components(m))) == [[0, 1], [2, 3]]
    data = standard_crystallographic_cartan(m)
    assert data.delta[0] == 1 and data.delta[2] == 1


def test_symmetrized_form():
    data = standard_crystallographic_cartan(PQ)
    for i in range(2):
        for j in range(2):
            assert data.sym[i][j] == data.sym[j][i]
