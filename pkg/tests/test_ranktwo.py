import pytest

from cambrian import groups
from cambrian.coxeter import positive
from cambrian.ranktwo import (Final, Initial, Neither, all_reflections, in_plane, reflection_prefix,
                              reflection_suffix, segment_type, span_subgroup)


def test_b2_span(B2):
    p, q = B2.simple_roots
    sub = span_subgroup(B2, q, p)
    assert (sub.r1, sub.r2, sub.m) == (p, q, 4)
    refl = all_reflections(sub)
    assert len(set(refl)) == 4 and refl[0] == p and refl[-1] == q
    assert reflection_suffix(sub, 1) == [q]


def test_span_orientation_independent_of_arguments(affA2):
    roots = affA2.reflections(5)
    for a in roots[:8]:
        for b in roots[:8]:
            if a != b:
                s1, s2 = span_subgroup(affA2, a, b), span_subgroup(affA2, b, a)
                assert (s1.r1, s1.r2) == (s2.r1, s2.r2)


def test_span_canonical_generators(affA2):
    """The canonical pair for the plane of pqp and r is (pqp, r) up to order, infinite order."""
    beta = affA2("p").cols[1]  # root of p q p
    r = affA2.simple_roots[2]
    sub = span_subgroup(affA2, positive(beta), r)
    assert {sub.r1, sub.r2} == {positive(beta), r}
    assert sub.infinite
    for root in reflection_prefix(sub, 6):
        assert in_plane(sub.r1, sub.r2, root)


def test_finite_subgroup_inside_affine(affG2):
    r, s, t = affG2.simple_roots
    sub = span_subgroup(affG2, r, s)
    assert sub.m == 6 and not sub.commutative
    assert span_subgroup(affG2, r, t).commutative


def test_segment_types(B2):
    p, q = B2.simple_roots
    sub = span_subgroup(B2, p, q)
    seq = all_reflections(sub)
    assert segment_type(sub, []) == Initial(0)
    assert segment_type(sub, seq[:2]) == Initial(2)
    assert segment_type(sub, seq[-3:]) == Final(3)
    assert segment_type(sub, [seq[1]]) == Neither()


@pytest.mark.parametrize("name", ["B3", "affine-G2", "hyperbolic-542"])
def test_inversions_are_segments(name):
    W = groups.load_group(name)
    for g in W.elements(5):
        inv = g.inversions
        for a in inv:
            for b in inv:
                if a < b:
                    sub = span_subgroup(W, a, b)
                    assert not isinstance(segment_type(sub, inv), Neither)
