import pytest
from hypothesis import given, settings, strategies as st

from cambrian import groups
from cambrian.coxeter import (InfiniteGroup, UnknownGenerator, min_coset_representative,
                              parabolic_factorization, positive, vec_sign)
from oracles import hyperoctahedral_group, symmetric_group

words3 = st.lists(st.integers(0, 2), max_size=12)


@pytest.mark.parametrize("name,order,top", [("A2", 6, 3), ("A3", 24, 6), ("A4", 120, 10),
                                            ("B2", 8, 4), ("B3", 48, 9)])
def test_finite_orders(name, order, top):
    W = groups.load_group(name)
    assert W.is_finite()
    assert len(W.all_elements()) == order
    assert W.longest_element().length == top


def test_lengths_match_permutation_model(A3, B3):
    for W, M in ((A3, symmetric_group(3)), (B3, hyperoctahedral_group(3))):
        seen = {}
        for g in W.all_elements():
            x = M.from_word(g.word)
            assert M.length[x] == g.length
            seen[x] = g
        assert len(seen) == len(M.elements)


def test_affine_growth(affA2):
    counts = [0] * 6
    for g in affA2.elements(5):
        counts[g.length] += 1
    assert counts == [1, 3, 6, 9, 12, 15]
    assert not affA2.is_finite()
    with pytest.raises(InfiniteGroup):
        affA2.longest_element()


@pytest.mark.parametrize("name", ["affine-G2", "hyperbolic-542", "B3"])
def test_braid_relations(name):
    W = groups.load_group(name)
    from cambrian.cartan import INF
    for i in range(W.n):
        assert (W.simple[i] * W.simple[i]) == W.identity
        for j in range(i + 1, W.n):
            m = W.cartan.coxeter.m[i][j]
            if m == INF:
                continue
            g = W.identity
            for _ in range(m):
                g = g * W.simple[i] * W.simple[j]
            assert g == W.identity


@settings(max_examples=60, deadline=None)
@given(words3)
def test_word_properties(word):
    W = groups.affine_G2()
    g = W.from_word(word)
    assert g.length <= len(word) and g.length % 2 == len(word) % 2
    assert W.from_word(g.word) == g
    assert len(g.inversions) == g.length
    assert g * g.inverse() == W.identity
    for beta in g.inversions:
        assert vec_sign(beta) > 0 and g.has_inversion(beta)
    for i in range(W.n):
        assert g.is_right_descent(i) == (g.right_mul_simple(i).length < g.length)
        assert g.is_left_descent(i) == (g.left_mul_simple(i).length < g.length)


@settings(max_examples=40, deadline=None)
@given(words3)
def test_reflections_are_involutions(word):
    W = groups.hyperbolic_542()
    g = W.from_word(word)
    for beta in g.inversions:
        t = W.reflection(beta)
        assert t * t == W.identity
        assert (t * g).length < g.length


def test_parabolic_factorization(B3):
    J = [0, 1]
    for g in B3.all_elements():
        wJ, u = parabolic_factorization(g, J)
        assert wJ * u == g
        assert wJ.in_parabolic(J)
        assert wJ.length + u.length == g.length
        assert not any(u.is_left_descent(j) for j in J)
        assert min_coset_representative(g, J, side="left") == u


def test_word_parsing(A3):
    assert A3("p,q,r") == A3("pqr") == A3([0, 1, 2])
    assert A3("") == A3("e") == A3.identity
    with pytest.raises(UnknownGenerator):
        A3("pz")


def test_cover_reflections_positive(affA2):
    for g in affA2.elements(5):
        for beta in g.cover_reflections():
            assert positive(beta) == beta
            assert (affA2.reflection(beta) * g).length == g.length - 1
