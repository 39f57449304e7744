"""The (right) weak order: comparisons, meets, bounded joins, canonical join representations."""
from __future__ import annotations

from typing import Iterable, Sequence

from .coxeter import Element


class NoUpperBoundInInterval(ValueError):
    """No common upper bound exists inside [e, bound]."""


class _Undetermined:
    """Sentinel: a bounded search found no answer (which proves nothing)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Undetermined"

    def __bool__(self):
        return False


Undetermined = _Undetermined()


def leq(x: Element, y: Element) -> bool:
    """x <= y iff inv(x) is contained in inv(y)."""
    if x.length > y.length:
        return False
    return x.inversions <= y.inversions


def interval_below(w: Element) -> list[Element]:
    """All x <= w, found by descending through lower covers; sorted by (length, word)."""
    seen = {w.key: w}
    frontier = [w]
    while frontier:
        nxt = []
        for g in frontier:
            for i in g.right_descents():
                h = g.right_mul_simple(i)
                if h.key not in seen:
                    seen[h.key] = h
                    nxt.append(h)
        frontier = nxt
    return sorted(seen.values(), key=lambda g: (g.length, g.word))


def _maximum(cands: Sequence[Element]) -> Element:
    top = max(cands, key=lambda g: (g.length, g.word))
    if not all(leq(c, top) for c in cands):
        raise AssertionError("set has no maximum")
    return top


def _minimum(cands: Sequence[Element]) -> Element:
    bottom = min(cands, key=lambda g: (g.length, g.word))
    if not all(leq(bottom, c) for c in cands):
        raise AssertionError("set has no minimum")
    return bottom


def meet(x: Element, *others: Element) -> Element:
    """Greatest common lower bound of one or more elements."""
    xs = [x, *others]
    shortest = min(xs, key=lambda g: g.length)
    lower = [v for v in interval_below(shortest) if all(leq(v, y) for y in xs)]
    return _maximum(lower)


def meet_all(xs: Iterable[Element]) -> Element:
    xs = list(xs)
    if not xs:
        raise ValueError("meet of an empty set needs an explicit top element")
    return meet(*xs)


def join_bounded(xs: Iterable[Element], bound: Element) -> Element:
    """Least common upper bound of ``xs`` inside the interval [e, bound].

    Since [e, bound] is a lattice, a common upper bound exists there exactly
    when every x lies below ``bound``.
    """
    xs = list(xs)
    for x in xs:
        if not leq(x, bound):
            raise NoUpperBoundInInterval(f"{x} is not below the bound {bound}")
    if not xs:
        return bound.group.identity
    upper = [u for u in interval_below(bound) if all(leq(x, u) for x in xs)]
    return _minimum(upper)


def join_exists_search(xs: Iterable[Element], max_length: int):
    """Join of ``xs`` if some common upper bound of length <= max_length exists.

    Returns ``Undetermined`` otherwise; nonexistence is never claimed.
    """
    xs = list(xs)
    if not xs:
        raise ValueError("join of an empty set")
    W = xs[0].group
    start = max(x.length for x in xs)
    for g in W.elements(max_length):
        if g.length < start:
            continue
        if all(leq(x, g) for x in xs):
            return join_bounded(xs, g)
    return Undetermined


def cover_reflections(w: Element) -> list:
    return w.cover_reflections()


def is_join_irreducible(w: Element) -> bool:
    """Exactly one cover reflection."""
    return len(w.right_descents()) == 1


def lower_covers(w: Element) -> list[Element]:
    return [w.right_mul_simple(i) for i in w.right_descents()]


def join_irreducible_below(w: Element, beta) -> Element:
    """j(w, t): the minimum of {v <= w : t in inv(v)} for a cover reflection t of w."""
    cands = [v for v in interval_below(w) if beta in v.inversions]
    return _minimum(cands)


def canonical_join_representation(w: Element) -> list[Element]:
    """{ j(w, t) : t in cov(w) }, sorted by (length, word)."""
    out = [join_irreducible_below(w, beta) for beta in w.cover_reflections()]
    return sorted(out, key=lambda g: (g.length, g.word))


def is_antichain(xs: Sequence[Element]) -> bool:
    return all(not leq(a, b) for a in xs for b in xs if a != b)


def antichain_leq(A: Iterable[Element], B: Iterable[Element]) -> bool:
    """A <<= B: every a in A lies below some b in B."""
    B = list(B)
    return all(any(leq(a, b) for b in B) for a in A)
