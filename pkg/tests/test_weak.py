import itertools

import pytest

from cambrian import weak
from oracles import hyperoctahedral_group, symmetric_group


def test_leq_matches_permutation_model(B3):
    M = hyperoctahedral_group(3)
    els = B3.all_elements()
    img = {g: M.from_word(g.word) for g in els}
    for x, y in itertools.product(els, repeat=2):
        assert weak.leq(x, y) == M.leq(img[x], img[y])


def test_meet_and_join_brute_force(A3):
    M = symmetric_group(3)
    els = A3.all_elements()
    top = A3.longest_element()
    for x, y in itertools.combinations(els, 2):
        lower = [z for z in els if weak.leq(z, x) and weak.leq(z, y)]
        upper = [z for z in els if weak.leq(x, z) and weak.leq(y, z)]
        m = weak.meet(x, y)
        j = weak.join_bounded([x, y], top)
        assert m in lower and all(weak.leq(z, m) for z in lower)
        assert j in upper and all(weak.leq(j, z) for z in upper)
        assert M.leq(M.from_word(m.word), M.from_word(x.word))


def test_join_bounded_without_bound(affA2):
    p, q = affA2("p"), affA2("q")
    with pytest.raises(weak.NoUpperBoundInInterval):
        weak.join_bounded([p, q], affA2("pr"))
    assert weak.join_bounded([p, q], affA2("pqp")) == affA2("pqp")


def test_join_search_undetermined(univ3):
    p, q = univ3("p"), univ3("q")
    assert weak.join_exists_search([p, q], 6) is weak.Undetermined


def test_join_irreducibles_and_canonical(B3):
    for w in B3.all_elements():
        A = weak.canonical_join_representation(w)
        assert weak.is_antichain(A)
        assert all(weak.is_join_irreducible(j) for j in A)
        assert len(A) == len(w.right_descents())
        if w.length:
            assert weak.join_bounded(A, w) == w


def test_lower_covers(affG2):
    for w in affG2.elements(6):
        covers = weak.lower_covers(w)
        assert len(covers) == len(w.right_descents())
        assert all(c.length == w.length - 1 and weak.leq(c, w) for c in covers)


def test_interval_below(B3):
    w0 = B3.longest_element()
    assert len(weak.interval_below(w0)) == 48
    w = B3("pqr")
    assert {g for g in weak.interval_below(w)} == {g for g in B3.all_elements() if weak.leq(g, w)}
