"""Property suites over finite groups or bounded portions of infinite ones.

Every check returns a list of violation records (plain dicts); an empty list
means the property held on everything examined.
"""
from __future__ import annotations

import itertools
from typing import Callable

from . import field as F
from . import weak
from .coxeter import CoxeterGroup, Element, parabolic_project, positive
from .fan import fan_check_in_tits, face_descriptor, verify_star
from .forms import (OmegaForm, compatible_reflection_sequence, euler_form,
                    euler_form_roots, zeta, det3)
from .ranktwo import rank_two_subgroups_of, reflection_prefix
from .sortable import (Projection, absolute_interval, delete, enumerate_sortables,
                       final_letters, initial_letters, is_sortable, nc,
                       pidown_with_choices, reflection_functor,
                       reflection_functor_inverse, rotate, sorting_word, cc_data,
                       JoinUnavailable)


def _v(check: str, **info) -> dict:
    return {"check": check, **{k: (v.word_str() if isinstance(v, Element) else v)
                               for k, v in info.items()}}


def elements(W: CoxeterGroup, max_length: int) -> list[Element]:
    """The whole group when finite, else all elements of length <= max_length."""
    if W.is_finite():
        return W.all_elements()
    return W.elements(max_length)


def coxeter_words(W: CoxeterGroup) -> list[tuple[int, ...]]:
    """One reduced word for every Coxeter element (commutation classes of orderings)."""
    seen, out = set(), []
    for perm in itertools.permutations(range(W.n)):
        key = W.from_word(perm).key
        if key not in seen:
            seen.add(key)
            out.append(perm)
    return out


def _subsets(n: int):
    for k in range(n + 1):
        yield from itertools.combinations(range(n), k)


def _bound(W: CoxeterGroup, max_length: int):
    """A join oracle: exact under w0 for finite W, bounded search otherwise."""
    if W.is_finite():
        top = W.longest_element()
        return lambda xs: weak.join_bounded(xs, top)
    return lambda xs: weak.join_exists_search(xs, max_length)


# ---------------------------------------------------------------------------
# forms

def check_forms(W: CoxeterGroup, c, reflection_length: int = 6) -> list[dict]:
    c = W.parse_word(c)
    out = []
    n = W.n
    e = W.simple_roots
    om = OmegaForm(W, c)
    for i in range(n):
        for j in range(n):
            x, y = e[i], e[j]
            if euler_form_roots(W, c, x, y) + euler_form_roots(W, c, y, x) != W.K(x, y):
                out.append(_v("symmetrization", i=i, j=j))
            if om(x, y) != -om(y, x):
                out.append(_v("omega-skew", i=i, j=j))
    for s in set(initial_letters(W, c)) | set(final_letters(W, c)):
        c2 = rotate(c, s) if s in initial_letters(W, c) else (s,) + delete(c, s)
        for i in range(n):
            for j in range(n):
                lhs = euler_form_roots(W, c, e[i], e[j])
                rhs = euler_form_roots(W, c2, W.simple[s].apply(e[i]), W.simple[s].apply(e[j]))
                if lhs != rhs:
                    out.append(_v("euler-invariant", s=W.generators[s], i=i, j=j))
    refl = W.reflections(reflection_length)
    for s in initial_letters(W, c):
        for beta in refl:
            val = om(e[s], beta)
            if F.sign(val) < 0 or (F.sign(val) == 0 and beta != e[s] and W.K(e[s], beta) != 0):
                out.append(_v("omega-initial", s=W.generators[s], root=str(beta)))
            if euler_form(W, c, e[s], beta) != beta[s]:
                out.append(_v("euler-initial", s=W.generators[s], root=str(beta)))
    for s in final_letters(W, c):
        for beta in refl:
            val = om(e[s], beta)
            if F.sign(val) > 0 or (F.sign(val) == 0 and beta != e[s] and W.K(e[s], beta) != 0):
                out.append(_v("omega-final", s=W.generators[s], root=str(beta)))
            # beta^vee in simple coroot coordinates: beta_u delta_u / (K(beta,beta)/2)
            half = F.div(W.K(beta, beta), 2)
            co = tuple(F.div(b * d, half) for b, d in zip(beta, W.delta))
            if euler_form(W, c, co, e[s]) != co[s]:
                out.append(_v("euler-final", s=W.generators[s], root=str(beta)))
    out += check_omega_cyclic(W, c, refl)
    if n == 3:
        z = zeta(W, c)
        for a, b in itertools.combinations(refl, 2):
            if F.sign(om(a, b)) != F.sign(det3(a, b, z)):
                out.append(_v("zeta-sign", a=str(a), b=str(b)))
    return out


def check_omega_cyclic(W: CoxeterGroup, c, roots: list, prefix: int = 8) -> list[dict]:
    """Within each rank-two subgroup, omega_c(u_i, u_j) for i < j has a single sign."""
    om = OmegaForm(W, W.parse_word(c))
    out = []
    for sub in rank_two_subgroups_of(W, roots):
        k = sub.m if sub.m is not None else prefix
        u = reflection_prefix(sub, k)
        signs = {F.sign(om(u[i], u[j])) for i in range(k) for j in range(i + 1, k)}
        if len(signs) > 1:
            out.append(_v("omega-cyclic", r1=str(sub.r1), r2=str(sub.r2), signs=sorted(signs)))
    return out


def commutation_class(W: CoxeterGroup, word: tuple) -> set:
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            if W.A[w[i]][w[i + 1]] == 0:
                u = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return seen


def reduced_words(g: Element) -> list[tuple]:
    if g.length == 0:
        return [()]
    out = []
    for i in g.right_descents():
        out += [w + (i,) for w in reduced_words(g.right_mul_simple(i))]
    return out


def check_inversion_ordering(W: CoxeterGroup, c, max_length: int = 6) -> list[dict]:
    """A reduced word is omega_c-compatible iff it is commutation-equivalent to a sorting word of a sortable."""
    c = W.parse_word(c)
    out = []
    for g in elements(W, max_length):
        sw = sorting_word(W, c, g)
        good = commutation_class(W, sw.letters) if sw.nested() else set()
        for word in reduced_words(g):
            if compatible_reflection_sequence(W, c, word) != (word in good):
                out.append(_v("inversion-ordering", word=W.format_word(word)))
    return out


# ---------------------------------------------------------------------------
# sortability, skips, walls and pi_down

def check_sortable(W: CoxeterGroup, c, max_length: int = 8) -> list[dict]:
    c = W.parse_word(c)
    out = []
    els = elements(W, max_length)
    pi = Projection(W, c)
    sortables = set(enumerate_sortables(W, c, max(g.length for g in els)))
    for g in els:
        a = is_sortable(W, c, g)
        if a != is_sortable(W, c, g, "recursive") or a != is_sortable(W, c, g, "aligned"):
            out.append(_v("three-way", w=g))
        if a != (g in sortables):
            out.append(_v("enumeration", w=g))
        sw = sorting_word(W, c, g)
        for sk in sw.skips:
            if sk.forced != (sk.reflection in g.inversions):
                out.append(_v("forced-skip", w=g, generator=W.generators[sk.generator]))
        v = pi(g)
        if not is_sortable(W, c, v) or not weak.leq(v, g) or (v == g) != a or pi(v) != v:
            out.append(_v("pidown-basic", w=g))
        if pidown_with_choices(W, c, g) != {v}:
            out.append(_v("pidown-well-defined", w=g))
        inv = g.inversions
        for u in sortables:
            if u.length > g.length:
                continue
            fiber = (set(u.cover_reflections()) <= inv
                     and not (sorting_word(W, c, u).unforced() & inv))
            if fiber != (u == v):
                out.append(_v("fiber", w=g, v=u))
        for s in initial_letters(W, c):
            if g.is_left_descent(s) != v.is_left_descent(s):
                out.append(_v("above-s", w=g, s=W.generators[s]))
        for i in range(W.n):
            if not g.is_right_descent(i):
                h = g.right_mul_simple(i)
                if not weak.leq(v, pi(h)):
                    out.append(_v("order-preserving", x=g, y=h))
        for J in _subsets(W.n):
            cJ = tuple(x for x in c if x in J)
            if Projection(W, cJ)(parabolic_project(g, J)) != parabolic_project(v, J):
                out.append(_v("pidown-parabolic", w=g, J=[W.generators[j] for j in J]))
    for v in sortables:
        data = cc_data(W, c, v)  # raises if the two wall computations disagree
        if sorted(map(positive, data.A), key=str) != sorted(v.cover_reflections(), key=str):
            out.append(_v("lower-walls", v=v))
        if set(data.B) != sorting_word(W, c, v).unforced():
            out.append(_v("upper-walls", v=v))
        for J in _subsets(W.n):
            cJ = tuple(x for x in c if x in J)
            if not is_sortable(W, cJ, parabolic_project(v, J)):
                out.append(_v("sort-parabolic", v=v, J=[W.generators[j] for j in J]))
        out += _check_cc_props(W, c, v)
    if W.is_finite() and not is_sortable(W, c, W.longest_element()):
        out.append(_v("w0-sortable"))
    return out


def _check_cc_props(W: CoxeterGroup, c: tuple, v: Element) -> list[dict]:
    out = []
    cov = set(v.cover_reflections())
    ufs = sorting_word(W, c, v).unforced()
    for s in set(final_letters(W, c)) | set(initial_letters(W, c)):
        final = s in final_letters(W, c)
        initial = s in initial_letters(W, c)
        alpha = W.simple_roots[s]
        rest = [i for i in range(W.n) if i != s]
        vs = parabolic_project(v, rest)
        if final and v.is_left_descent(s) and alpha not in cov:
            out.append(_v("final-descent-covers", v=v, s=W.generators[s]))
        hyp = (final and v.is_left_descent(s)) or (initial and alpha in cov)
        if not hyp:
            continue
        if weak.join_bounded([W.simple[s], vs], v) != v:
            out.append(_v("cc-join", v=v, s=W.generators[s]))
        if cov != {alpha} | set(vs.cover_reflections()):
            out.append(_v("cc-cov", v=v, s=W.generators[s]))
        if final:
            c2 = delete(c, s)
            if ufs != sorting_word(W, c2, vs).unforced():
                out.append(_v("cc-final-ufs", v=v, s=W.generators[s]))
        if initial and alpha in cov:
            c2 = delete(c, s)
            want = {positive(W.simple[s].apply(b)) for b in sorting_word(W, c2, vs).unforced()}
            if ufs != want:
                out.append(_v("cc-initial-ufs", v=v, s=W.generators[s]))
    return out


# ---------------------------------------------------------------------------
# lattice-theoretic properties

def check_lattice(W: CoxeterGroup, c, max_length: int = 6) -> list[dict]:
    c = W.parse_word(c)
    out = []
    els = elements(W, max_length)
    pi = Projection(W, c)
    join = _bound(W, 2 * max_length)
    for x, y in itertools.combinations(els, 2):
        m = weak.meet(x, y)
        if pi(m) != weak.meet(pi(x), pi(y)):
            out.append(_v("pidown-meet", x=x, y=y))
        j = join([x, y])
        if j is weak.Undetermined:
            continue
        pj = join([pi(x), pi(y)])
        if pj is weak.Undetermined or pi(j) != pj:
            out.append(_v("pidown-join", x=x, y=y))
    sortables = enumerate_sortables(W, c, max_length if not W.is_finite() else 10_000)
    for x, y in itertools.combinations(sortables, 2):
        m = weak.meet(x, y)
        if not is_sortable(W, c, m) or m.inversions != x.inversions & y.inversions:
            out.append(_v("sortable-meet", x=x, y=y))
        j = join([x, y])
        if j is not weak.Undetermined and not is_sortable(W, c, j):
            out.append(_v("sortable-join", x=x, y=y))
    out += check_reflection_functor(W, c, max_length)
    out += check_canonical_joins(W, c, max_length, sortables)
    if W.is_finite():
        out += check_nc(W, c, sortables)
    return out


def check_reflection_functor(W: CoxeterGroup, c, max_length: int) -> list[dict]:
    c = W.parse_word(c)
    out = []
    finite = W.is_finite()
    cap = 10_000 if finite else max_length
    for s in initial_letters(W, c):
        c2 = rotate(c, s)
        src = enumerate_sortables(W, c, cap)
        dst = set(enumerate_sortables(W, c2, cap + 1))
        image = set()
        for v in src:
            try:
                x = reflection_functor(W, c, s, v, max_length=2 * max_length + 2)
            except JoinUnavailable:
                continue
            image.add(x)
            if not is_sortable(W, c2, x):
                out.append(_v("functor-sortable", v=v, s=W.generators[s]))
            if reflection_functor_inverse(W, c, s, x) != v:
                out.append(_v("functor-round-trip", v=v, s=W.generators[s]))
        for x in dst:
            if x.length > cap and not finite:
                continue
            v = reflection_functor_inverse(W, c, s, x)
            if not is_sortable(W, c, v):
                out.append(_v("inverse-sortable", x=x, s=W.generators[s]))
                continue
            try:
                back = reflection_functor(W, c, s, v, max_length=2 * max_length + 2)
            except JoinUnavailable:
                continue
            if back != x:
                out.append(_v("inverse-round-trip", x=x, s=W.generators[s]))
        if finite and image != dst:
            out.append(_v("functor-bijection", s=W.generators[s]))
    return out


def canonical_join_minimal(w: Element, A: list[Element]) -> bool:
    """A <<= B for every antichain B with join w.

    Fails exactly when, for some a in A, the elements of [e, w] not above a
    still join to w; their maximal elements then form a violating antichain.
    """
    below = weak.interval_below(w)
    for a in A:
        U = [x for x in below if not weak.leq(a, x)]
        if U and weak.join_bounded(U, w) == w:
            return False
    return True


def antichains_joining_to(w: Element, limit: int = 200_000) -> list[list[Element]]:
    """Literal enumeration of antichains of [e, w] whose join is w."""
    below = weak.interval_below(w)
    idx = {g: k for k, g in enumerate(below)}
    up = [0] * len(below)
    for x in below:
        for y in below:
            if weak.leq(x, y):
                up[idx[x]] |= 1 << idx[y]
    top = 1 << idx[w]
    full = (1 << len(below)) - 1
    out: list[list[Element]] = []
    comparable = [up[k] | sum(1 << j for j in range(len(below)) if up[j] >> k & 1)
                  for k in range(len(below))]

    def grow(start: int, chosen: list[int], allowed: int, meet_up: int):
        if chosen and meet_up == top:
            out.append([below[k] for k in chosen])
        if len(out) > limit:
            raise RuntimeError("antichain limit exceeded")
        for k in range(start, len(below)):
            if allowed >> k & 1:
                grow(k + 1, chosen + [k], allowed & ~comparable[k], meet_up & up[k])

    grow(0, [], full, full)
    return out


def check_canonical_joins(W: CoxeterGroup, c, max_length: int, sortables=None,
                          literal_limit: int = 0) -> list[dict]:
    out = []
    els = elements(W, max_length)
    for w in els:
        A = weak.canonical_join_representation(w)
        if w.length and weak.join_bounded(A, w) != w:
            out.append(_v("canonical-join", w=w))
        covs = [b for j in A for b in j.cover_reflections()]
        if sorted(covs, key=str) != sorted(w.cover_reflections(), key=str):
            out.append(_v("canonical-cov", w=w))
        if not all(weak.is_join_irreducible(j) for j in A) or not weak.is_antichain(A):
            out.append(_v("canonical-shape", w=w))
        if not canonical_join_minimal(w, A):
            out.append(_v("canonical-minimal", w=w))
        if w.length <= literal_limit:
            for B in antichains_joining_to(w):
                if not weak.antichain_leq(A, B):
                    out.append(_v("canonical-minimal-literal", w=w))
                    break
    if c is not None:
        c = W.parse_word(c)
        if sortables is None:
            sortables = enumerate_sortables(W, c, max_length)
        ji = {}
        for v in sortables:
            if not all(is_sortable(W, c, j) for j in weak.canonical_join_representation(v)):
                out.append(_v("csort-canon", v=v))
            if weak.is_join_irreducible(v):
                t = v.cover_reflections()[0]
                if t in ji:
                    out.append(_v("exactly-one-ji", t=str(t)))
                ji[t] = v
        # each accessible reflection has a join-irreducible below every sortable inverting it
        for v in sortables:
            for t in v.inversions:
                j = ji.get(t)
                if j is None or not weak.leq(j, v):
                    out.append(_v("accessible-ji", v=v, t=str(t)))
    return out


def check_nc(W: CoxeterGroup, c, sortables=None) -> list[dict]:
    c = W.parse_word(c)
    if sortables is None:
        sortables = enumerate_sortables(W, c, 10_000)
    out = []
    images = {}
    for v in sortables:
        x = nc(W, c, v)
        if x in images:
            out.append(_v("nc-injective", v=v, u=images[x]))
        images[x] = v
    covs = {frozenset(v.cover_reflections()) for v in sortables}
    if len(covs) != len(sortables):
        out.append(_v("cov-injective"))
    interval = set(absolute_interval(W, c))
    if set(images) != interval:
        out.append(_v("nc-interval", image=len(images), interval=len(interval)))
    return out


# ---------------------------------------------------------------------------
# fans

def check_fan(W: CoxeterGroup, c, max_length: int = 8, star_faces: int = 0) -> list[dict]:
    c = W.parse_word(c)
    out = [_v("fan-" + r.pop("violation_kind"), **r) for r in fan_check_in_tits(W, c, max_length)]
    pi = Projection(W, c)
    chambers = W.elements(max_length)
    fibers: dict = {}
    for w in chambers:
        fibers.setdefault(pi(w), []).append(w)
    for v, ws in fibers.items():
        for s in range(W.n):
            if len({w.is_left_descent(s) for w in ws}) > 1:
                out.append(_v("fan-s", v=v, s=W.generators[s]))
    for J in _subsets(W.n):
        cJ = tuple(x for x in c if x in J)
        piJ = Projection(W, cJ)
        for v, ws in fibers.items():
            if len({piJ(parabolic_project(w, J)) for w in ws}) > 1:
                out.append(_v("fan-parabolic", v=v, J=[W.generators[j] for j in J]))
    out += _check_recursive_fan(W, c, chambers, pi)
    return out


def _same_classes(ws: list, f: Callable, g: Callable) -> bool:
    a = {w: f(w) for w in ws}
    b = {w: g(w) for w in ws}
    return all((a[x] == a[y]) == (b[x] == b[y]) for x, y in itertools.combinations(ws, 2))


def _check_recursive_fan(W, c, chambers, pi) -> list[dict]:
    out = []
    for s in initial_letters(W, c):
        rest = [i for i in range(W.n) if i != s]
        pis = Projection(W, rotate(c, s))
        above = [w for w in chambers if w.is_left_descent(s)]
        if not _same_classes(above, pi, lambda w: pis(w.left_mul_simple(s))):
            out.append(_v("recursive-fan-above", s=W.generators[s]))
        pisc = Projection(W, delete(c, s))
        below = [w for w in chambers if not w.is_left_descent(s)]
        if not _same_classes(below, pi, lambda w: pisc(parabolic_project(w, rest))):
            out.append(_v("recursive-fan-below", s=W.generators[s]))
    for s in final_letters(W, c):
        rest = [i for i in range(W.n) if i != s]
        pics = Projection(W, delete(c, s))
        above = [w for w in chambers if w.is_left_descent(s)]
        if not _same_classes(above, pi, lambda w: pics(parabolic_project(w, rest))):
            out.append(_v("recursive-fan-final", s=W.generators[s]))
    return out


def random_faces(W: CoxeterGroup, c, count: int, rng) -> list:
    """Faces (v, J) of sortable cones with J a nonempty set of descents of v."""
    c = W.parse_word(c)
    pool = []
    for v in enumerate_sortables(W, c, 10_000 if W.is_finite() else 6):
        D = v.right_descents()
        for J in _subsets(len(D)):
            if J:
                pool.append((v, tuple(D[k] for k in J)))
    rng.shuffle(pool)
    return [face_descriptor(W, v, J) for v, J in pool[:count]]


def check_stars(W: CoxeterGroup, c, faces) -> list[dict]:
    out = []
    for f in faces:
        for r in verify_star(W, c, f):
            out.append(_v("star", v=f.v, J=[W.generators[j] for j in f.J], **r))
    return out


SUITES = ("forms", "sortable", "lattice", "fan")


def run_suite(W: CoxeterGroup, name: str, cs=None, max_length: int = 6) -> list[dict]:
    """Run one named suite for each Coxeter element in ``cs`` (default: all of them)."""
    words = [W.parse_word(c) for c in cs] if cs else coxeter_words(W)
    out = []
    for c in words:
        if name == "forms":
            rep = check_forms(W, c, max_length) + check_inversion_ordering(W, c, min(max_length, 6))
        elif name == "sortable":
            rep = check_sortable(W, c, max_length)
        elif name == "lattice":
            rep = check_lattice(W, c, max_length)
        elif name == "fan":
            rep = check_fan(W, c, max_length)
        else:
            raise ValueError(f"unknown suite {name!r}")
        for r in rep:
            r["c"] = W.format_word(c)
        out += rep
    return out
