"""Sortable elements, skips, Cambrian walls, the projection pi_down and related maps.

A Coxeter element c is always passed as a reduced word (a permutation of the
generators, or of a parabolic subset of them in recursive calls). Recursions
peel off the first letter of the stored word, which is always initial.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import field as F
from . import weak
from .coxeter import (CoxeterGroup, Element, InfiniteGroup, Root, parabolic_project, positive, vec_sign)
from .forms import OmegaForm, coxeter_word
from .ranktwo import Initial, intersect, rank_two_subgroups_of, segment_type


class NotSortable(ValueError):
    """The element is not c-sortable."""


class JoinUnavailable(ValueError):
    """A join needed by the reflection functor could not be certified."""


class NotInitial(ValueError):
    """The generator is not initial in the Coxeter element."""


# ---------------------------------------------------------------------------
# Coxeter element manipulation

def rotate(c: tuple, s: int) -> tuple:
    """scs for s initial: move s from the front to the back."""
    c = move_to_front(c, s)
    return c[1:] + c[:1]


def delete(c: tuple, s: int) -> tuple:
    """The restriction of c to the parabolic subgroup without s."""
    return tuple(x for x in c if x != s)


def initial_letters(W: CoxeterGroup, c: Sequence[int]) -> list[int]:
    """Generators s such that some reduced word for c starts with s."""
    out = []
    for k, s in enumerate(c):
        if all(W.A[s][c[j]] == 0 for j in range(k)):
            out.append(s)
    return out


def final_letters(W: CoxeterGroup, c: Sequence[int]) -> list[int]:
    return [s for s in initial_letters(W, tuple(reversed(c)))]


def move_to_front(c: tuple, s: int) -> tuple:
    k = c.index(s)
    return (s,) + c[:k] + c[k + 1:]


def _coxeter(W: CoxeterGroup, c) -> tuple[int, ...]:
    if isinstance(c, tuple) and all(isinstance(x, int) for x in c):
        return c
    return coxeter_word(W, c)


# ---------------------------------------------------------------------------
# sorting words and skips

@dataclass(frozen=True)
class Skip:
    """The first unused copy of a generator in the c-sorting extraction.

    ``position`` is i + 1 when the copy lies between letters a_i and a_{i+1};
    ``wall`` is a_1 ... a_i (alpha_r), negative exactly when the skip is forced.
    """

    generator: int
    position: int
    forced: bool
    reflection: Root
    wall: Root


@dataclass(frozen=True)
class SortingWord:
    c: tuple[int, ...]
    letters: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    skips: tuple[Skip, ...]

    @property
    def dividers(self) -> tuple[int, ...]:
        """Positions (in ``letters``) at which each block ends."""
        out, total = [], 0
        for b in self.blocks:
            total += len(b)
            out.append(total)
        return tuple(out)

    def supports(self) -> list[frozenset]:
        return [frozenset(b) for b in self.blocks]

    def nested(self) -> bool:
        """Block supports weakly decreasing under inclusion."""
        sup = self.supports()
        return all(sup[i + 1] <= sup[i] for i in range(len(sup) - 1))

    def skip_of(self, r: int) -> Skip:
        return next(s for s in self.skips if s.generator == r)

    def forced(self) -> frozenset:
        return frozenset(s.reflection for s in self.skips if s.forced)

    def unforced(self) -> frozenset:
        return frozenset(s.reflection for s in self.skips if not s.forced)


def sorting_word(W: CoxeterGroup, c, w: Element) -> SortingWord:
    """Leftmost subword of c c c ... that is a reduced word for w, with its skips."""
    c = _coxeter(W, c)
    x = w
    prefix = W.identity
    letters: list[int] = []
    blocks: list[tuple[int, ...]] = []
    skips: dict[int, Skip] = {}
    while True:
        block = []
        for a in c:
            if x.length > 0 and x.is_left_descent(a):
                letters.append(a)
                block.append(a)
                x = x.left_mul_simple(a)
                prefix = prefix.right_mul_simple(a)
            elif a not in skips:
                wall = prefix.cols[a]
                forced = vec_sign(wall) < 0
                skips[a] = Skip(a, len(letters) + 1, forced, positive(wall), wall)
        if block:
            blocks.append(tuple(block))
        if x.length == 0 and len(skips) == len(c):
            break
    ordered = tuple(skips[a] for a in sorted(skips))
    return SortingWord(c, tuple(letters), tuple(blocks), ordered)


def forced_skips(W: CoxeterGroup, c, w: Element) -> frozenset:
    """fs_c(w) as positive roots."""
    return sorting_word(W, c, w).forced()


def unforced_skips(W: CoxeterGroup, c, w: Element) -> frozenset:
    """ufs_c(w) as positive roots."""
    return sorting_word(W, c, w).unforced()


# ---------------------------------------------------------------------------
# three sortability tests

def is_sortable(W: CoxeterGroup, c, w: Element, method: str = "word") -> bool:
    c = _coxeter(W, c)
    if method == "word":
        return sorting_word(W, c, w).nested()
    if method == "recursive":
        return _sortable_recursive(W, c, w, {})
    if method == "aligned":
        return is_aligned(W, c, w)
    raise ValueError(f"unknown method {method!r}")


def _sortable_recursive(W, c: tuple, w: Element, memo: dict) -> bool:
    if w.length == 0:
        return True
    if not c:
        return False
    key = (c, w.key)
    if key in memo:
        return memo[key]
    s = c[0]
    if w.is_left_descent(s):
        out = _sortable_recursive(W, c[1:] + (s,), w.left_mul_simple(s), memo)
    else:
        out = w.in_parabolic(c[1:]) and _sortable_recursive(W, c[1:], w, memo)
    memo[key] = out
    return out


def is_aligned(W: CoxeterGroup, c, w: Element) -> bool:
    """c-alignment with respect to every noncommutative rank-two subgroup.

    Only subgroups meeting inv(w) in at least two reflections can fail: a
    single inversion inside W' is always one of its canonical generators.
    """
    c = _coxeter(W, c)
    om = OmegaForm(W, c)
    inv = sorted(w.inversions, key=_root_key)
    for sub in rank_two_subgroups_of(W, inv):
        if sub.commutative:
            continue
        I = intersect(sub, inv)
        orient = F.sign(om(sub.r1, sub.r2))
        if orient == 0:
            if len(I) > 1:
                return False
            continue
        if orient < 0:
            sub = sub.reversed()
        if I == {sub.r2}:
            continue
        if not isinstance(segment_type(sub, I), Initial):
            return False
    return True


def _root_key(r):
    return tuple(float(x) for x in r)


# ---------------------------------------------------------------------------
# Cambrian walls C_c(v)

@dataclass(frozen=True)
class CcData:
    """Roots C_c^r(v) by generator index, split into negative and positive members."""

    v: Element
    c: tuple[int, ...]
    roots: dict = field(hash=False)

    @property
    def A(self) -> list[Root]:
        return [self.roots[r] for r in sorted(self.roots) if vec_sign(self.roots[r]) < 0]

    @property
    def B(self) -> list[Root]:
        return [self.roots[r] for r in sorted(self.roots) if vec_sign(self.roots[r]) > 0]

    def normals(self) -> list[Root]:
        return [self.roots[r] for r in sorted(self.roots)]


def _walls_recursive(W: CoxeterGroup, c: tuple, v: Element, memo: dict) -> dict:
    if not c:
        return {}
    key = (c, v.key)
    if key in memo:
        return memo[key]
    s = c[0]
    if v.is_left_descent(s):
        inner = _walls_recursive(W, c[1:] + (s,), v.left_mul_simple(s), memo)
        out = {r: W.simple[s].apply(beta) for r, beta in inner.items()}
    else:
        out = dict(_walls_recursive(W, c[1:], v, memo))
        out[s] = W.simple_roots[s]
    memo[key] = out
    return out


def walls_recursive(W: CoxeterGroup, c, v: Element) -> dict:
    """C_c^r(v) for every r, from the recursive definition."""
    return _walls_recursive(W, _coxeter(W, c), v, {})


def walls_from_skips(W: CoxeterGroup, c, v: Element) -> dict:
    """C_c^r(v) = a_1 ... a_i (alpha_r) where r is skipped at position i + 1."""
    sw = sorting_word(W, c, v)
    return {s.generator: s.wall for s in sw.skips}


def cc_data(W: CoxeterGroup, c, v: Element) -> CcData:
    """C_c(v), computed recursively and cross-checked against the skips."""
    c = _coxeter(W, c)
    if not is_sortable(W, c, v):
        raise NotSortable(str(v))
    rec = walls_recursive(W, c, v)
    sk = walls_from_skips(W, c, v)
    if rec != sk:
        raise AssertionError(f"wall computations disagree for {v}")
    return CcData(v, c, dict(sorted(rec.items())))


# ---------------------------------------------------------------------------
# the projection pi_down

class Projection:
    """pi_down^c with a memo table shared across calls."""

    def __init__(self, W: CoxeterGroup, c):
        self.W = W
        self.c = _coxeter(W, c)
        self._memo: dict = {}

    def __call__(self, w: Element) -> Element:
        return self._pi(self.c, w)

    def _pi(self, c: tuple, w: Element) -> Element:
        if w.length == 0:
            return w
        key = (c, w.key)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        s = c[0]
        if w.is_left_descent(s):
            out = self._pi(c[1:] + (s,), w.left_mul_simple(s)).left_mul_simple(s)
        else:
            out = self._pi(c[1:], parabolic_project(w, c[1:]))
        self._memo[key] = out
        return out


def pidown(W: CoxeterGroup, c, w: Element) -> Element:
    """The unique maximal c-sortable element below w."""
    return Projection(W, c)(w)


def pidown_with_choices(W: CoxeterGroup, c, w: Element) -> set:
    """Every value pi_down can take when any initial letter may be peeled off."""
    memo: dict = {}

    def go(c: tuple, w: Element) -> frozenset:
        if w.length == 0:
            return frozenset([w])
        key = (c, w.key)
        if key in memo:
            return memo[key]
        out = set()
        for s in initial_letters(W, c):
            cs = move_to_front(c, s)
            if w.is_left_descent(s):
                out.update(v.left_mul_simple(s) for v in go(cs[1:] + (s,), w.left_mul_simple(s)))
            else:
                out.update(go(cs[1:], parabolic_project(w, cs[1:])))
        memo[key] = frozenset(out)
        return memo[key]

    return set(go(_coxeter(W, c), w))


# ---------------------------------------------------------------------------
# enumeration

def enumerate_sortables(W: CoxeterGroup, c, max_length: int) -> list[Element]:
    """All c-sortable elements of length <= max_length, sorted by (length, word).

    Every sortable element is reached from a shorter sortable element by
    appending the last letter of its sorting word.
    """
    c = _coxeter(W, c)
    found = {W.identity.key: W.identity}
    layer = [W.identity]
    for _ in range(max_length):
        nxt = []
        for v in layer:
            for i in range(W.n):
                if v.is_right_descent(i):
                    continue
                u = v.right_mul_simple(i)
                if u.key in found:
                    continue
                if is_sortable(W, c, u):
                    found[u.key] = u
                    nxt.append(u)
        if not nxt:
            break
        layer = nxt
    return sorted(found.values(), key=lambda g: (g.length, g.word))


# ---------------------------------------------------------------------------
# Cambrian semilattice operations

def sortable_meet(W: CoxeterGroup, c, xs: Iterable[Element]) -> Element:
    out = weak.meet_all(xs)
    if not is_sortable(W, c, out):
        raise AssertionError(f"meet {out} is not sortable")
    return out


def sortable_join(W: CoxeterGroup, c, xs: Iterable[Element], bound: Element) -> Element:
    out = weak.join_bounded(xs, bound)
    if not is_sortable(W, c, out):
        raise AssertionError(f"join {out} is not sortable")
    return out


# ---------------------------------------------------------------------------
# reflection functor between c-sortables and scs-sortables

def _join_with_simple(W: CoxeterGroup, s: int, v: Element, bound: Element | None,
                      max_length: int | None) -> Element:
    xs = [W.simple[s], v]
    if bound is not None:
        try:
            return weak.join_bounded(xs, bound)
        except weak.NoUpperBoundInInterval as exc:
            raise JoinUnavailable(str(exc)) from None
    if W.is_finite():
        return weak.join_bounded(xs, W.longest_element())
    if max_length is None:
        raise JoinUnavailable("supply a bound or a search length for the join")
    out = weak.join_exists_search(xs, max_length)
    if out is weak.Undetermined:
        raise JoinUnavailable(f"no upper bound of length <= {max_length}")
    return out


def reflection_functor(W: CoxeterGroup, c, s, v: Element, bound: Element | None = None,
                       max_length: int | None = None) -> Element:
    """v -> sv if v >= s, else s join v (maps c-sortables to scs-sortables)."""
    c = _coxeter(W, c)
    s = W.index(s)
    if s not in initial_letters(W, c):
        raise NotInitial(W.generators[s])
    if v.is_left_descent(s):
        return v.left_mul_simple(s)
    return _join_with_simple(W, s, v, bound, max_length)


def reflection_functor_inverse(W: CoxeterGroup, c, s, x: Element) -> Element:
    """x -> sx if x is not above s, else the projection of x away from s."""
    c = _coxeter(W, c)
    s = W.index(s)
    if s not in initial_letters(W, c):
        raise NotInitial(W.generators[s])
    if x.is_left_descent(s):
        return parabolic_project(x, [i for i in range(W.n) if i != s])
    return x.left_mul_simple(s)


# ---------------------------------------------------------------------------
# noncrossing partitions

def nc(W: CoxeterGroup, c, v: Element) -> Element:
    """Product of the cover reflections of v in reflection-sequence order."""
    c = _coxeter(W, c)
    sw = sorting_word(W, c, v)
    if not sw.nested():
        raise NotSortable(str(v))
    cov = set(v.cover_reflections())
    g = W.identity
    prefix = W.identity
    for a in sw.letters:
        beta = prefix.cols[a]
        if beta in cov:
            g = g * W.reflection(beta)
        prefix = prefix.right_mul_simple(a)
    return g


def absolute_lengths(W: CoxeterGroup) -> dict:
    """l_T of every element of a finite group, by breadth-first search over T."""
    if not W.is_finite():
        raise InfiniteGroup("absolute length needs a finite group")
    elements = W.all_elements()
    roots = set()
    for g in elements:
        roots |= g.inversions
    refl = [W.reflection(b) for b in sorted(roots, key=_root_key)]
    dist = {W.identity.key: 0}
    frontier = deque([W.identity])
    while frontier:
        g = frontier.popleft()
        for t in refl:
            h = g * t
            if h.key not in dist:
                dist[h.key] = dist[g.key] + 1
                frontier.append(h)
    return dist


def absolute_interval(W: CoxeterGroup, c) -> list[Element]:
    """[1, c]_T = { x : l_T(x) + l_T(x^-1 c) = l_T(c) }."""
    c = _coxeter(W, c)
    dist = absolute_lengths(W)
    ce = W.from_word(c)
    total = dist[ce.key]
    out = [x for x in W.all_elements() if dist[x.key] + dist[(x.inverse() * ce).key] == total]
    return sorted(out, key=lambda g: (g.length, g.word))
