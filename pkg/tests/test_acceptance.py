"""Acceptance criteria 1-12, one pass/fail line each.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
Time limits are wall-clock budgets per criterion.
"""
import io
import itertools
import random
import sys
import time
from contextlib import redirect_stdout
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cambrian import field as F, groups, weak  # noqa: E402
from cambrian.checks import (antichains_joining_to, check_canonical_joins, check_nc,  # noqa: E402
                             check_reflection_functor, check_stars, coxeter_words, random_faces)
from cambrian.cli import main as cli_main  # noqa: E402
from cambrian.coxeter import positive  # noqa: E402
from cambrian.fan import face_descriptor, fan_check_in_tits, star_of_face, verify_star  # noqa: E402
from cambrian.forms import OmegaForm, compatible_reflection_sequence, det3, zeta  # noqa: E402
from cambrian.render import shaded_words  # noqa: E402
from cambrian.sortable import (Projection, absolute_interval, cc_data, enumerate_sortables,  # noqa: E402
                               is_sortable, nc, sorting_word)
from oracles import catalan  # noqa: E402


def root_of(W, word):
    """Positive root of the reflection with palindromic word a_1 ... a_k ... a_1."""
    word = W.parse_word(word)
    k = len(word) // 2
    assert len(word) % 2 == 1 and word == word[::-1]
    beta = W.from_word(word[:k]).apply(W.simple_roots[word[k]])
    assert W.reflection(beta) == W.from_word(word)
    return positive(beta)


def neg(beta):
    return tuple(-x for x in beta)


# ---------------------------------------------------------------------------

def c1():
    W = groups.type_A(3)
    listed = ["", "p", "q", "r", "pq", "qr", "rp", "pqp", "pqr", "qrq",
              "pqrp", "pqrq", "pqrpq", "pqrpqp"]
    got = enumerate_sortables(W, "pqr", 100)
    ok = len(got) == 14 and set(got) == {W(w) for w in listed}
    return ok, f"{len(got)} sortables"


def c2():
    bad = []
    for n in (2, 3, 4):
        W = groups.type_A(n)
        for c in coxeter_words(W):
            k = len(enumerate_sortables(W, c, 100))
            if k != catalan(n + 1):
                bad.append((n, c, k))
    return not bad, "counts 5, 14, 42 for every Coxeter element" if not bad else str(bad)


def c3():
    W = groups.affine_A2()
    v = W("pqrpr")
    data = cc_data(W, "pqr", v)
    want = {1: root_of(W, "pqrpqprqp"), 0: neg(root_of(W, "pqrqp")), 2: neg(root_of(W, "q"))}
    cov = {root_of(W, "pqrqp"), root_of(W, "q")}
    ok = data.roots == want and set(v.cover_reflections()) == cov
    return ok, f"C^p={data.roots[0]} C^q={data.roots[1]} C^r={data.roots[2]}"


def _fiber_violations(W, c, chambers, sortables):
    pi = Projection(W, c)
    ufs = {u: sorting_word(W, c, u).unforced() for u in sortables}
    cov = {u: set(u.cover_reflections()) for u in sortables}
    bad = 0
    for w in chambers:
        v = pi(w)
        inv = w.inversions
        for u in sortables:
            if u.length <= w.length:
                bad += (cov[u] <= inv and not (ufs[u] & inv)) != (u == v)
    return bad


def c4():
    bad = 0
    B3 = groups.type_B(3)
    for c in coxeter_words(B3):
        bad += _fiber_violations(B3, c, B3.all_elements(), enumerate_sortables(B3, c, 100))
    At = groups.affine_A2()
    for c in coxeter_words(At):
        bad += _fiber_violations(At, c, At.elements(8), enumerate_sortables(At, c, 8))
    return bad == 0, f"{bad} violations"


def c5():
    bad = checked = 0
    for W, els in ((groups.type_B(3), None), (groups.affine_A2(), 10)):
        chambers = W.all_elements() if els is None else W.elements(els)
        for c in coxeter_words(W):
            for g in chambers:
                a = is_sortable(W, c, g)
                bad += not (a == is_sortable(W, c, g, "recursive") == is_sortable(W, c, g, "aligned"))
                checked += 1
    return bad == 0, f"{bad} disagreements in {checked} checks"


def c6():
    W = groups.type_B(3)
    top = W.longest_element()
    els = W.all_elements()
    bad = 0
    for c in coxeter_words(W):
        pi = Projection(W, c)
        for x, y in itertools.combinations(els, 2):
            bad += pi(weak.meet(x, y)) != weak.meet(pi(x), pi(y))
            bad += pi(weak.join_bounded([x, y], top)) != weak.join_bounded([pi(x), pi(y)], top)
        sortables = enumerate_sortables(W, c, 100)
        for x, y in itertools.combinations(sortables, 2):
            bad += not is_sortable(W, c, weak.meet(x, y))
            bad += not is_sortable(W, c, weak.join_bounded([x, y], top))
    return bad == 0, f"{bad} violations"


def c7():
    report = []
    for name in ("A2", "B2", "B3"):
        W = groups.load_group(name)
        for c in coxeter_words(W):
            report += check_reflection_functor(W, c, 100)
    for name in ("affine-G2", "affine-A2"):
        W = groups.load_group(name)
        for c in coxeter_words(W):
            report += check_reflection_functor(W, c, 8)
    return not report, f"{len(report)} violations"


def c8():
    W = groups.type_B(3)
    bad, sizes = 0, set()
    for c in coxeter_words(W):
        sortables = enumerate_sortables(W, c, 100)
        bad += len(check_nc(W, c, sortables))
        images = {nc(W, c, v) for v in sortables}
        sizes.add((len(images), len(absolute_interval(W, c))))
    return bad == 0 and sizes == {(20, 20)}, f"{bad} violations, (image, interval) sizes {sorted(sizes)}"


def c9():
    report = []
    B3 = groups.type_B(3)
    for c in coxeter_words(B3):
        report += check_canonical_joins(B3, c, 100, literal_limit=100)
    At = groups.affine_A2()
    for c in coxeter_words(At):
        report += check_canonical_joins(At, c, 8, literal_limit=8)
    G = groups.affine_G2()
    w = G("srtsrsrs")
    rep = set(weak.canonical_join_representation(w))
    g2 = is_sortable(G, "srt", w) and rep == {G("sr"), G("t")}
    literal = all(weak.antichain_leq(rep, B) for B in antichains_joining_to(w))
    return not report and g2 and literal, f"{len(report)} violations; srtsrsrs -> {sorted(map(str, rep))}"


def c10():
    report = []
    cases = [("B3", 9), ("affine-A2", 8), ("affine-G2", 8), ("hyperbolic-542", 7)]
    for name, cap in cases:
        W = groups.load_group(name)
        for c in coxeter_words(W):
            report += fan_check_in_tits(W, c, cap)
    G = groups.affine_G2()
    v = G("srtsrsrs")
    one = face_descriptor(G, v, ["r"])
    two = face_descriptor(G, G("st") * G.longest_element(["r", "s"]), ["r", "s"])
    stars = (star_of_face(G, "srt", one) == (G("stsrsrs"), (0,))
             and star_of_face(G, "srt", two) == (G("st"), (0, 1)))
    report += verify_star(G, "srt", one) + verify_star(G, "srt", two)
    B3 = groups.load_group("B3")
    faces = random_faces(B3, "pqr", 20, random.Random(2024))
    report += check_stars(B3, "pqr", faces)
    return not report and stars and len(faces) == 20, f"{len(report)} violations"


def c11():
    bad = pairs = 0
    for name in ("A3", "B3", "affine-A2", "affine-G2", "hyperbolic-542", "universal3"):
        W = groups.load_group(name)
        roots = W.reflections(8)
        for c in coxeter_words(W):
            om, z = OmegaForm(W, c), zeta(W, c)
            for b1, b2 in itertools.combinations(roots, 2):
                pairs += 1
                bad += F.sign(om(b1, b2)) != F.sign(det3(b1, b2, z))
    H = groups.hyperbolic_542()
    compatible = compatible_reflection_sequence(H, "rst", "rstrsts")
    sw = sorting_word(H, "rst", H("rstrsts"))
    return bad == 0 and compatible and sw.letters == H.parse_word("rstrsts"), \
        f"{bad} sign mismatches in {pairs} pairs; rstrsts compatible={compatible}"


def c12():
    argv = ["render", "--group", "affine-G2", "--c", "s,r,t", "--max-len", "8"]
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli_main(argv)
        outs.append((code, buf.getvalue()))
    G = groups.affine_G2()
    want = sorted(v.word_str("") for v in enumerate_sortables(G, "srt", 8))
    got = sorted(shaded_words(outs[0][1]))
    ok = outs[0][0] == 0 and got == want and outs[0][1].encode() == outs[1][1].encode()
    return ok, f"{len(got)} shaded chambers, {len(want)} sortables, identical={outs[0][1] == outs[1][1]}"


CRITERIA = [
    (1, "A3 pqr sortables listed", c1, 1),
    (2, "Catalan counts A2 A3 A4", c2, 10),
    (3, "affine A2 walls of pqrpr", c3, 1),
    (4, "fiber description", c4, 60),
    (5, "three-way sortability", c5, 60),
    (6, "semilattice laws B3", c6, 60),
    (7, "reflection functor", c7, None),
    (8, "nc on B3", c8, 120),
    (9, "canonical join representations", c9, None),
    (10, "fan in Tits cone and stars", c10, 300),
    (11, "omega signs and zeta", c11, None),
    (12, "render consistency", c12, None),
]


def evaluate(number, label, fn, limit):
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    in_time = limit is None or dt < limit
    status = "PASS" if ok and in_time else "FAIL"
    budget = f" / {limit}s" if limit else ""
    return ok and in_time, f"criterion {number:2d} {status}  {label}: {detail} [{dt:.2f}s{budget}]"


@pytest.mark.parametrize("number,label,fn,limit", CRITERIA, ids=[f"criterion_{n}" for n, *_ in CRITERIA])
def test_criterion(number, label, fn, limit, capsys):
    ok, line = evaluate(number, label, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*row) for row in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
