"""Cambrian cones, chamber membership, fan verification inside the Tits cone, and stars of faces.

Points of V* are written by their pairings with the simple roots, so the
pairing of a point p with a root beta is the ordinary dot product, and the
fundamental chamber D is the positive orthant.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import field as F
from .coxeter import CoxeterGroup, Element, InfiniteGroup, Root, neg, positive
from .forms import OmegaForm
from .linalg import dot, inverse, nullspace, transpose
from .sortable import Projection, _coxeter, cc_data, enumerate_sortables, sorting_word


class NotAFace(ValueError):
    """J is not a set of simple generators through a face of the cone of v."""


class RankTooLarge(ValueError):
    """Exact polyhedral checks are limited to rank at most four."""


EXACT_RANK_LIMIT = 4


# ---------------------------------------------------------------------------
# cones

@dataclass(frozen=True)
class Cone:
    """The simplicial cone { x : <x, beta> >= 0 for every normal beta }."""

    normals: tuple[Root, ...]
    provenance: object = field(default=None, compare=False)

    def pairings(self, p: Sequence) -> list:
        return [dot(beta, p) for beta in self.normals]

    def contains(self, p: Sequence) -> bool:
        """Closed membership: boundary points count."""
        return all(F.sign(x) >= 0 for x in self.pairings(p))

    def contains_interior(self, p: Sequence) -> bool:
        return all(F.sign(x) > 0 for x in self.pairings(p))

    def rays(self) -> list[tuple]:
        """Extreme rays: rays[k] pairs to 1 with normal k and to 0 with the others."""
        return [tuple(col) for col in transpose(inverse([list(b) for b in self.normals]))]


def cone_of(W: CoxeterGroup, c, v: Element) -> Cone:
    """Cone_c(v), with inward normals C_c(v) listed by generator."""
    data = cc_data(W, c, v)
    return Cone(tuple(data.normals()), v)


def chamber_point(w: Element) -> tuple:
    """An interior point of the chamber wD."""
    return w.apply_dual((1,) * w.group.n)


def chamber_rays(w: Element) -> list[tuple]:
    """Rays of wD: images of the fundamental weights."""
    n = w.group.n
    return [w.apply_dual(tuple(1 if j == k else 0 for j in range(n))) for k in range(n)]


def chamber_in_cone(W: CoxeterGroup, c, v: Element, w: Element) -> bool:
    """wD lies in Cone_c(v): cov(v) within inv(w) and no unforced skip of v inverted by w."""
    inv = w.inversions
    if not all(beta in inv for beta in v.cover_reflections()):
        return False
    return not any(beta in inv for beta in sorting_word(W, c, v).unforced())


# ---------------------------------------------------------------------------
# Tits cone membership by descent

@dataclass(frozen=True)
class InTits:
    w: Element


@dataclass(frozen=True)
class Boundary:
    """The point lies on a wall of the chamber wD."""

    w: Element


@dataclass(frozen=True)
class NotInTits:
    """Descent did not terminate within the cap; inconclusive."""

    cap: int


def tits_membership(W: CoxeterGroup, p: Sequence, cap: int = 1000):
    """Reflect by a simple generator pairing negatively until p lands in the closure of D."""
    p = tuple(p)
    w = W.identity
    for _ in range(cap):
        s = next((i for i in range(W.n) if F.sign(p[i]) < 0), None)
        if s is None:
            if all(F.sign(x) > 0 for x in p):
                return InTits(w)
            if any(F.sign(x) != 0 for x in p):
                return Boundary(w)
            return NotInTits(cap)  # the origin
        row = W.A[s]
        ps = p[s]
        p = tuple(pj - row[j] * ps for j, pj in enumerate(p))
        w = w.right_mul_simple(s)
    return NotInTits(cap)


# ---------------------------------------------------------------------------
# fan verification

def _normalize_ray(r: Sequence) -> tuple:
    lead = next(x for x in r if x != 0)
    scale = lead if F.sign(lead) > 0 else -lead
    return tuple(F.div(x, scale) for x in r)


def intersection_rays(c1: Cone, c2: Cone) -> list[tuple]:
    """Extreme rays of c1 & c2 by exact enumeration over (n-1)-subsets of facet normals."""
    n = len(c1.normals)
    normals = list(dict.fromkeys(c1.normals + c2.normals))
    out = {}
    for sub in itertools.combinations(normals, n - 1):
        ker = nullspace([list(b) for b in sub])
        if len(ker) != 1:
            continue
        for r in (tuple(ker[0]), tuple(-x for x in ker[0])):
            if c1.contains(r) and c2.contains(r):
                out[_normalize_ray(r)] = True
    return sorted(out, key=lambda r: tuple(float(x) for x in r))


def face_failures(c1: Cone, c2: Cone, rays: list[tuple]) -> list[tuple]:
    """Rays of the smallest face of c1 containing c1 & c2 that leave c2."""
    zero = [k for k, beta in enumerate(c1.normals) if all(F.sign(dot(beta, r)) == 0 for r in rays)]
    face_rays = [r for k, r in enumerate(c1.rays()) if k not in zero]
    return [r for r in face_rays if not c2.contains(r)]


def _witnesses(ray: tuple, rays: list[tuple]) -> list[tuple]:
    pts = [ray]
    for r in rays:
        pts.append(tuple(a + b for a, b in zip(ray, r)))
    return pts


def fan_check_in_tits(W: CoxeterGroup, c, max_length: int, cap: int = 200) -> list[dict]:
    """Violations of the fan property for the cones of sortables with l(v) <= max_length.

    Three checks run: every chamber wD with l(w) <= max_length lies in
    exactly one enumerated cone (combinatorially and at an exact interior
    point); adjacent chambers in different cones meet along a shared wall;
    each pairwise intersection of cones is a face of both. A face failure is
    only reported when a witness point of it lies inside the Tits cone.
    Records carry ``violation_kind`` and either a ``witness_chamber`` or a
    ``pair`` of cones.
    """
    if W.n > EXACT_RANK_LIMIT:
        raise RankTooLarge(f"rank {W.n} exceeds {EXACT_RANK_LIMIT}")
    c = _coxeter(W, c)
    pi = Projection(W, c)
    report: list[dict] = []
    sortables = enumerate_sortables(W, c, max_length)
    cones = {v: cone_of(W, c, v) for v in sortables}
    chambers = W.elements(max_length)

    for w in chambers:
        owner = pi(w)
        hits = [v for v in sortables if v.length <= w.length and chamber_in_cone(W, c, v, w)]
        if hits != [owner]:
            report.append({"violation_kind": "partition", "witness_chamber": w.word_str(),
                           "cones": [v.word_str() for v in hits]})
        p = chamber_point(w)
        inside = [v for v, cone in cones.items() if cone.contains(p)]
        if inside != [owner] or not cones[owner].contains_interior(p):
            report.append({"violation_kind": "interior-point", "witness_chamber": w.word_str(),
                           "cones": [v.word_str() for v in inside]})
        for s in range(W.n):
            ws = w.right_mul_simple(s)
            other = pi(ws)
            if other == owner:
                continue
            beta = w.cols[s]  # w(alpha_s): positive on wD
            if beta not in cones[owner].normals or (other in cones and neg(beta) not in cones[other].normals):
                report.append({"violation_kind": "wall", "witness_chamber": w.word_str(),
                               "generator": W.generators[s]})

    for v1, v2 in itertools.combinations(sortables, 2):
        c1, c2 = cones[v1], cones[v2]
        if set(c1.normals) == set(c2.normals):
            report.append({"violation_kind": "duplicate-cone", "pair": [v1.word_str(), v2.word_str()]})
            continue
        rays = intersection_rays(c1, c2)
        for a, b in ((c1, c2), (c2, c1)):
            for bad in face_failures(a, b, rays):
                for x in _witnesses(bad, rays):
                    if isinstance(tits_membership(W, x, cap), (InTits, Boundary)):
                        report.append({"violation_kind": "not-a-face", "pair": [v1.word_str(), v2.word_str()],
                                       "witness_point": [str(t) for t in x]})
                        break
    return report


# ---------------------------------------------------------------------------
# faces and stars

@dataclass(frozen=True)
class FaceDescriptor:
    """A face of Cone_c(v): J the simple generators through it, w = v w_0(J) below it."""

    v: Element
    J: tuple[int, ...]
    w: Element


def face_descriptor(W: CoxeterGroup, v: Element, J) -> FaceDescriptor:
    J = tuple(sorted(W.index(s) for s in J))
    if not all(v.is_right_descent(j) for j in J):
        raise NotAFace("vJv^-1 must consist of cover reflections of v")
    try:
        w0 = W.longest_element(J)
    except InfiniteGroup:
        raise NotAFace("W_J must be finite") from None
    return FaceDescriptor(v, J, v * w0)


def cox_order(W: CoxeterGroup, c, w: Element, J: Sequence[int]) -> tuple[int, ...]:
    """Order J so that s_i precedes s_j whenever omega_c(beta_{w s_i w^-1}, beta_{w s_j w^-1}) > 0."""
    om = OmegaForm(W, _coxeter(W, c))
    roots = {j: positive(w.cols[j]) for j in J}
    before = {j: set() for j in J}
    for i, j in itertools.permutations(J, 2):
        if F.sign(om(roots[i], roots[j])) > 0:
            before[j].add(i)
    order: list[int] = []
    left = set(J)
    while left:
        ready = sorted(j for j in left if not (before[j] & left))
        if not ready:
            raise AssertionError("omega orientation has a cycle")
        order.append(ready[0])
        left.remove(ready[0])
    return tuple(order)


def star_of_face(W: CoxeterGroup, c, f: FaceDescriptor) -> tuple[Element, tuple[int, ...]]:
    """The element below the face and Cox_c of the face, a Coxeter element of W_J."""
    return f.w, cox_order(W, c, f.w, f.J)


def verify_star(W: CoxeterGroup, c, f: FaceDescriptor) -> list[dict]:
    """pi^Cox(x) = pi^Cox(y) iff pi^c(wx) = pi^c(wy), for all x, y in W_J."""
    w, cox = star_of_face(W, c, f)
    if not f.J:
        return []
    local = Projection(W, cox)
    glob = Projection(W, c)
    WJ = W.elements(10_000, f.J)
    a = {x: local(x) for x in WJ}
    b = {x: glob(w * x) for x in WJ}
    report = []
    for x, y in itertools.combinations(WJ, 2):
        if (a[x] == a[y]) != (b[x] == b[y]):
            report.append({"violation_kind": "star", "pair": [x.word_str(), y.word_str()]})
    return report
