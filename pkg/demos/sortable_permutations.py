"""
Sortable permutations
=====================

In S_4 (type A3) the c-sortable elements are counted by the Catalan number
14. Here they are listed for c = pqr, with the cover reflections, the
unforced skips and the noncrossing partition attached to each one.
"""
from cambrian import groups
from cambrian.sortable import enumerate_sortables, nc, sorting_word

W = groups.type_A(3)
c = "pqr"


def one_line(g):
    """Permutation of 1..4 obtained by letting each letter swap two adjacent positions."""
    perm = [1, 2, 3, 4]
    for i in g.word:
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return "".join(map(str, perm))


def refl(beta):
    return W.reflection(beta).word_str("")


print("%-8s %-6s %-16s %-16s %s" % ("word", "perm", "cov", "ufs", "nc"))
for v in enumerate_sortables(W, c, 10):
    sw = sorting_word(W, c, v)
    print("%-8s %-6s %-16s %-16s %s" % (
        v.word_str("") or "e", one_line(v),
        " ".join(sorted(map(refl, v.cover_reflections()))),
        " ".join(sorted(map(refl, sw.unforced()))),
        nc(W, c, v).word_str("") or "e"))

# Counts for every Coxeter element of A2, A3, A4.
from cambrian.checks import coxeter_words

for n in (2, 3, 4):
    G = groups.type_A(n)
    counts = {G.format_word(cw, ""): len(enumerate_sortables(G, cw, 100)) for cw in coxeter_words(G)}
    print(f"A{n}:", counts)
