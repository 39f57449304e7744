import random

import pytest

from cambrian import fan, groups
from cambrian.checks import check_fan, check_stars, random_faces
from cambrian.fan import (Boundary, InTits, NotAFace, NotInTits, chamber_in_cone, chamber_point,
                          cone_of, cox_order, face_descriptor, fan_check_in_tits,
                          intersection_rays, star_of_face, tits_membership, verify_star)
from cambrian.sortable import enumerate_sortables, pidown


def test_cone_rays_dual_to_normals(affA2):
    cone = cone_of(affA2, "pqr", affA2("pqrpr"))
    for k, ray in enumerate(cone.rays()):
        assert cone.pairings(ray) == [1 if j == k else 0 for j in range(3)]


def test_chamber_points_locate_projection(affG2):
    sortables = enumerate_sortables(affG2, "srt", 7)
    cones = {v: cone_of(affG2, "srt", v) for v in sortables}
    for w in affG2.elements(6):
        v = pidown(affG2, "srt", w)
        assert cones[v].contains_interior(chamber_point(w))
        assert chamber_in_cone(affG2, "srt", v, w)


def test_tits_membership(affA2, B3):
    w = affA2("pqrq")
    assert tits_membership(affA2, chamber_point(w)) == InTits(w)
    assert isinstance(tits_membership(affA2, (-1, -1, -1), cap=50), NotInTits)
    assert isinstance(tits_membership(affA2, (0, 1, 1)), Boundary)
    assert isinstance(tits_membership(B3, (-1, -2, -3)), InTits)


@pytest.mark.parametrize("name,c,cap", [("B3", "pqr", 9), ("affine-A2", "qpr", 6),
                                        ("affine-G2", "tsr", 6), ("hyperbolic-542", "rst", 5)])
def test_fan_suite(name, c, cap):
    W = groups.load_group(name)
    assert check_fan(W, c, cap) == []


def test_fan_check_detects_corrupted_cone(B3, monkeypatch):
    good = fan.cone_of
    target = B3("pqr")

    def corrupted(W, c, v):
        cone = good(W, c, v)
        if v == target:
            normals = list(cone.normals)
            normals[0] = tuple(2 * x + y for x, y in zip(normals[0], normals[1]))
            return fan.Cone(tuple(normals), v)
        return cone

    monkeypatch.setattr(fan, "cone_of", corrupted)
    kinds = {r["violation_kind"] for r in fan_check_in_tits(B3, "pqr", 9)}
    assert kinds & {"interior-point", "wall", "not-a-face"}


def test_intersection_of_adjacent_cones(B3):
    c1, c2 = cone_of(B3, "pqr", B3.identity), cone_of(B3, "pqr", B3("p"))
    rays = intersection_rays(c1, c2)
    assert len(rays) == 2
    assert all(c1.contains(r) and c2.contains(r) for r in rays)


def test_rank_limit():
    with pytest.raises(fan.RankTooLarge):
        fan_check_in_tits(groups.type_A(5), "pqrst", 2)


def test_face_descriptor_errors(affG2):
    with pytest.raises(NotAFace):
        face_descriptor(affG2, affG2("sr"), ["s"])
    v = affG2("srtsrsrs")
    with pytest.raises(NotAFace):
        face_descriptor(affG2, affG2.identity, ["r"])
    assert face_descriptor(affG2, v, ["s"]).w == v.right_mul_simple(1)


def test_g2_stars(affG2):
    one = face_descriptor(affG2, affG2("stsrsrsr"), ["r"])
    assert one.w == affG2("stsrsrs")
    assert star_of_face(affG2, "srt", one)[1] == (0,)
    v = affG2("st") * affG2.longest_element(["r", "s"])
    two = face_descriptor(affG2, v, ["r", "s"])
    w, cox = star_of_face(affG2, "srt", two)
    assert w == affG2("st") and cox == (0, 1)
    assert verify_star(affG2, "srt", one) == [] and verify_star(affG2, "srt", two) == []


def test_random_b3_stars(B3):
    faces = random_faces(B3, "pqr", 10, random.Random(7))
    assert len(faces) == 10
    assert check_stars(B3, "pqr", faces) == []
    for f in faces:
        assert sorted(cox_order(B3, "pqr", f.w, f.J)) == list(f.J)
