import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cambrian import field as F

rats = st.fractions(min_value=-50, max_value=50, max_denominator=20)
fields = st.sampled_from([2, 3, 5, 7])


@given(rats, rats, fields)
def test_sign_matches_float(a, b, d):
    x = F.surd(a, b, d)
    val = float(a) + float(b) * math.sqrt(d)
    if abs(val) > 1e-9:
        assert F.sign(x) == (1 if val > 0 else -1)
    if b != 0 or a != 0:
        assert F.sign(x) != 0


@given(rats, rats, rats, rats, fields)
def test_field_axioms(a, b, c, e, d):
    x, y = F.surd(a, b, d), F.surd(c, e, d)
    assert x + y - y == x
    assert x * y == y * x
    if x != 0:
        assert x * F.div(1, x) == 1
        assert F.div(y, x) * x == y


def test_collapse_to_rational():
    r5 = F.sqrt(5)
    assert r5 * r5 == 5 and isinstance(r5 * r5, int)
    assert F.sqrt(9) == 3
    golden = F.surd(Fraction(1, 2), Fraction(1, 2), 5)
    assert golden * golden - golden == 1


def test_field_mismatch():
    with pytest.raises(F.FieldMismatch):
        F.sqrt(2) + F.sqrt(3)


def test_non_squarefree_rejected():
    with pytest.raises(ValueError):
        F.surd(0, 1, 8)


@given(rats, rats, fields)
def test_json_round_trip(a, b, d):
    x = F.surd(a, b, d)
    assert F.from_json(F.to_json(x), d) == x
