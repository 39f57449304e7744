"""
Walls of a Cambrian cone
========================

For the affine group of type A2 with c = pqr, take the sortable element
v = pqrpr. Its sorting word skips each generator once; the skipped roots
are the inward normals of the cone of v. Negative normals are the cover
reflections, positive ones the unforced skips.
"""
from cambrian import groups
from cambrian.coxeter import positive
from cambrian.sortable import Projection, cc_data, enumerate_sortables, sorting_word

W = groups.affine_A2()
c = "pqr"
v = W("pqrpr")

sw = sorting_word(W, c, v)
print("sorting word:", " | ".join(W.format_word(b, "") for b in sw.blocks))
for sk in sw.skips:
    kind = "forced" if sk.forced else "unforced"
    print(f"  skip {W.generators[sk.generator]} at {sk.position}: {kind}, wall {sk.wall}")

data = cc_data(W, c, v)
print("cover reflections:", [W.reflection(positive(b)).word_str("") for b in data.A])
print("unforced skips:   ", [W.reflection(b).word_str("") for b in data.B])

# Every chamber below length 7 sits in the cone of its projection.
pi = Projection(W, c)
fibres = {}
for w in W.elements(7):
    fibres.setdefault(pi(w), []).append(w.word_str(""))
for u in enumerate_sortables(W, c, 4):
    print(f"{u.word_str('') or 'e':>6} <- {len(fibres.get(u, []))} chambers")
