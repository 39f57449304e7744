"""Generalized rank-two parabolic subgroups and their reflection orders.

For two reflections t1, t2 the subgroup W' is generated by every reflection
whose root lies in the plane spanned by their roots. Its canonical generators
r1, r2 are the reflections t of W' whose inversion set meets W' only in t.
The reflections of W' are ordered u_1 = r1, u_2 = r1 r2 r1, ..., u_m = r2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import field as F
from .coxeter import CoxeterGroup, Root, positive
from .linalg import rank, rref

INFINITE = None  # the order m of an infinite dihedral subgroup
DEFAULT_CAP = 64


class CapTooSmall(RuntimeError):
    """The search cap was reached before the answer could be certified."""


def in_plane(beta1: Sequence, beta2: Sequence, gamma: Sequence) -> bool:
    """True when gamma lies in span(beta1, beta2)."""
    if len(gamma) == 3:
        a, b, c = beta1, beta2, gamma
        return (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0])) == 0
    return rank([beta1, beta2, gamma]) <= 2


def plane_key(beta1: Sequence, beta2: Sequence) -> tuple:
    """A canonical label for span(beta1, beta2)."""
    return tuple(tuple(row) for row in rref([beta1, beta2])[0])


@dataclass(frozen=True)
class Initial:
    k: int


@dataclass(frozen=True)
class Final:
    k: int


@dataclass(frozen=True)
class Neither:
    pass


@dataclass(frozen=True)
class RankTwoSubgroup:
    """Canonical roots r1, r2 and the order m of r1 r2 (None when infinite)."""

    group: CoxeterGroup
    r1: Root
    r2: Root
    m: int | None

    @property
    def infinite(self) -> bool:
        return self.m is None

    @property
    def commutative(self) -> bool:
        return self.m == 2

    def contains(self, beta: Sequence) -> bool:
        return in_plane(self.r1, self.r2, beta)

    def key(self) -> frozenset:
        return frozenset((self.r1, self.r2))

    def reversed(self) -> "RankTwoSubgroup":
        return RankTwoSubgroup(self.group, self.r2, self.r1, self.m)


def _alternating_roots(W: CoxeterGroup, a: Root, b: Root, k: int) -> list[Root]:
    """Reflection sequence of the alternating word t_a t_b t_a ... of length k."""
    ta, tb = W.reflection(a), W.reflection(b)
    out = []
    g = W.identity
    for i in range(k):
        beta = a if i % 2 == 0 else b
        out.append(positive(g.apply(beta)))
        g = g * (ta if i % 2 == 0 else tb)
    return out


def _canonical_below(W: CoxeterGroup, beta: Root, plane: tuple[Root, Root]) -> Root:
    """A canonical generator of W' lying in the inversion set of t_beta."""
    t = W.reflection(beta)
    inside = [g for g in set(t.inversions) if in_plane(plane[0], plane[1], g)]
    for g in sorted(inside, key=lambda r: W.reflection(r).length):
        u = W.reflection(g)
        if all(not in_plane(plane[0], plane[1], h) or h == g for h in u.inversions):
            return g
    raise AssertionError("no canonical generator found")


def _order(W: CoxeterGroup, r1: Root, r2: Root, cap: int) -> int | None:
    # a product >= 4 of the two normalized pairings certifies infinite order
    p = W.coroot_coefficient(r1, r2) * W.coroot_coefficient(r2, r1)
    if F.sign(p - 4) >= 0:
        return INFINITE
    prod = W.reflection(r1) * W.reflection(r2)
    g = prod
    for k in range(1, cap + 1):
        if g == W.identity:
            return k
        g = g * prod
    return INFINITE


def span_subgroup(W: CoxeterGroup, beta1: Sequence, beta2: Sequence,
                  length_cap: int = DEFAULT_CAP) -> RankTwoSubgroup:
    """The generalized rank-two parabolic subgroup containing two reflections."""
    b1, b2 = positive(beta1), positive(beta2)
    if b1 == b2 or rank([b1, b2]) < 2:
        raise ValueError("reflections must be distinct")
    cache = W.__dict__.setdefault("_rank_two_cache", {})
    key = (plane_key(b1, b2), length_cap)
    hit = cache.get(key)
    if hit is not None:
        return hit
    cache[key] = sub = _span(W, b1, b2, length_cap)
    return sub


def _span(W: CoxeterGroup, b1: Root, b2: Root, length_cap: int) -> RankTwoSubgroup:
    plane = (b1, b2)
    r1 = _canonical_below(W, b1, plane)
    r2 = None
    for start in (b1, b2):
        if start == r1:
            continue
        for cand in (start, positive(W.reflection(r1).apply(start))):
            if cand == r1:
                continue
            c = _canonical_below(W, cand, plane)
            if c != r1:
                r2 = c
                break
        if r2 is not None:
            break
    if r2 is None:
        raise CapTooSmall("could not locate the second canonical generator")
    # fixed orientation: the lexicographically larger root comes first
    if tuple(map(float, r2)) > tuple(map(float, r1)):
        r1, r2 = r2, r1
    return RankTwoSubgroup(W, r1, r2, _order(W, r1, r2, length_cap))


def reflection_prefix(sub: RankTwoSubgroup, k: int) -> list[Root]:
    """u_1, ..., u_k."""
    if sub.m is not None and k > sub.m:
        raise ValueError(f"only {sub.m} reflections in this subgroup")
    return _alternating_roots(sub.group, sub.r1, sub.r2, k)


def reflection_suffix(sub: RankTwoSubgroup, k: int) -> list[Root]:
    """u_{m-k+1}, ..., u_m (formal positions from the end when m is infinite)."""
    if sub.m is not None and k > sub.m:
        raise ValueError(f"only {sub.m} reflections in this subgroup")
    return list(reversed(_alternating_roots(sub.group, sub.r2, sub.r1, k)))


def all_reflections(sub: RankTwoSubgroup) -> list[Root]:
    if sub.m is None:
        raise ValueError("infinitely many reflections")
    return reflection_prefix(sub, sub.m)


def _locate(sub: RankTwoSubgroup, members: set, cap: int) -> tuple[dict, dict]:
    """Positions of ``members`` counted from the start and from the end."""
    front, back = {}, {}
    if sub.m is not None:
        seq = all_reflections(sub)
        for i, b in enumerate(seq):
            if b in members:
                front[b] = i + 1
                back[b] = sub.m - i
        return front, back
    k = 4
    while True:
        pre = reflection_prefix(sub, k)
        suf = reflection_suffix(sub, k)
        front = {b: i + 1 for i, b in enumerate(pre) if b in members}
        back = {b: k - i for i, b in enumerate(suf) if b in members}
        if all(b in front or b in back for b in members):
            return front, back
        if k >= cap:
            raise CapTooSmall("reflections not found within the cap")
        k = min(2 * k, cap)


def segment_type(sub: RankTwoSubgroup, inv: Iterable, cap: int = 4 * DEFAULT_CAP):
    """Classify inv restricted to W' as Initial(k), Final(k) or Neither."""
    members = {positive(b) for b in inv if sub.contains(b)}
    if not members:
        return Initial(0)
    front, back = _locate(sub, members, cap)
    k = len(members)
    if all(front.get(b, 0) and front[b] <= k for b in members):
        return Initial(k)
    if all(back.get(b, 0) and back[b] <= k for b in members):
        return Final(k)
    return Neither()


def intersect(sub: RankTwoSubgroup, inv: Iterable) -> set:
    return {positive(b) for b in inv if sub.contains(b)}


def rank_two_subgroups_of(W: CoxeterGroup, roots: Sequence[Root], cap: int = DEFAULT_CAP) -> list[RankTwoSubgroup]:
    """Distinct subgroups spanned by pairs from ``roots``."""
    out, seen = [], set()
    roots = list(roots)
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            a, b = roots[i], roots[j]
            if any(in_plane(s.r1, s.r2, a) and in_plane(s.r1, s.r2, b) for s in out):
                continue
            sub = span_subgroup(W, a, b, cap)
            if sub.key() not in seen:
                seen.add(sub.key())
                out.append(sub)
    return out
