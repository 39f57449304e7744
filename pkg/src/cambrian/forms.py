"""The Euler form E_c, its skew part omega_c, and the rank-3 vector zeta_c."""
from __future__ import annotations

from typing import Iterable, Sequence

from . import field as F
from .coxeter import CoxeterGroup, Element, Root
from .linalg import det, nullspace


class NotCoxeterElement(ValueError):
    """A word for c must use each generator (of the relevant parabolic) exactly once."""


class NotReduced(ValueError):
    """The word is not reduced."""


class RankNotThree(ValueError):
    """The operation is only defined in rank three."""


def coxeter_word(W: CoxeterGroup, c, J: Iterable | None = None) -> tuple[int, ...]:
    """Parse and validate a reduced word for a Coxeter element of W (or of W_J)."""
    word = W.parse_word(c)
    expected = set(range(W.n)) if J is None else {W.index(s) for s in J}
    if len(word) != len(set(word)) or set(word) != expected:
        raise NotCoxeterElement(f"{W.format_word(word)!r} is not a Coxeter element")
    return word


def euler_table(W: CoxeterGroup, c: Sequence[int]) -> list[list]:
    """E[i][j] = E_c(coroot_i, root_j) for generators i, j occurring in c."""
    pos = {g: k for k, g in enumerate(c)}
    n = W.n
    E = [[0] * n for _ in range(n)]
    for i in c:
        for j in c:
            if pos[i] > pos[j]:
                E[i][j] = W.A[i][j]
            elif i == j:
                E[i][j] = 1
    return E


def euler_form(W: CoxeterGroup, c, x: Sequence, y: Sequence):
    """E_c(x, y) with x in simple-coroot coordinates and y in simple-root coordinates."""
    c = W.parse_word(c)
    E = euler_table(W, c)
    total = 0
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj != 0 and E[i][j] != 0:
                total = total + xi * yj * E[i][j]
    return total


def root_to_coroot_coords(W: CoxeterGroup, x: Sequence) -> tuple:
    """A vector sum x_s alpha_s rewritten as sum x_s delta(s) alpha_s^vee."""
    return tuple(xi * d for xi, d in zip(x, W.delta))


def euler_form_roots(W: CoxeterGroup, c, x: Sequence, y: Sequence):
    """E_c(x, y) with both arguments in simple-root coordinates."""
    return euler_form(W, c, root_to_coroot_coords(W, x), y)


class OmegaForm:
    """omega_c as a precomputed skew matrix on simple-root coordinates."""

    def __init__(self, W: CoxeterGroup, c):
        self.W = W
        self.c = W.parse_word(c)
        E = euler_table(W, self.c)
        n = W.n
        # matrix of (x, y) -> E_c(x, y) on root coordinates
        M = [[W.delta[i] * E[i][j] for j in range(n)] for i in range(n)]
        self.matrix = [[M[i][j] - M[j][i] for j in range(n)] for i in range(n)]

    def __call__(self, x: Sequence, y: Sequence):
        total = 0
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.matrix[i]
            for j, yj in enumerate(y):
                if yj != 0 and row[j] != 0:
                    total = total + xi * yj * row[j]
        return total


def omega(W: CoxeterGroup, c, x: Sequence, y: Sequence):
    """omega_c(x, y) = E_c(x, y) - E_c(y, x) for roots x, y."""
    return OmegaForm(W, c)(x, y)


def commute(W: CoxeterGroup, beta: Sequence, gamma: Sequence) -> bool:
    """Distinct reflections commute iff their roots are K-orthogonal."""
    return W.K(beta, gamma) == 0


def reflection_sequence_of_word(W: CoxeterGroup, word) -> list[Root]:
    word = W.parse_word(word)
    g = W.identity
    seq = []
    for i in word:
        seq.append(g.cols[i])
        g = g.right_mul_simple(i)
    return seq


def compatible_reflection_sequence(W: CoxeterGroup, c, word) -> bool:
    """omega_c(beta_i, beta_j) >= 0 for i <= j, strictly unless t_i and t_j commute."""
    word = W.parse_word(word)
    if W.from_word(word).length != len(word):
        raise NotReduced(W.format_word(word))
    om = OmegaForm(W, c)
    seq = reflection_sequence_of_word(W, word)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            s = F.sign(om(seq[i], seq[j]))
            if s < 0:
                return False
            if s == 0 and not commute(W, seq[i], seq[j]):
                return False
    return True


def coxeter_element(W: CoxeterGroup, c) -> Element:
    return W.from_word(W.parse_word(c))


def det3(a: Sequence, b: Sequence, z: Sequence):
    """det[a | b | z] with the vectors as columns."""
    return det([[a[k], b[k], z[k]] for k in range(3)])


def zeta(W: CoxeterGroup, c) -> Root:
    """The (-1)-eigenvector of c spanning the radical of omega_c (rank 3 only).

    Scaled so its first nonzero coordinate is +-1, with the sign chosen so
    that sign omega_c(x, y) = sign det[x | y | zeta] on the first pair of
    non-commuting simple roots taken in the order of c.
    """
    if W.n != 3:
        raise RankNotThree(f"rank is {W.n}")
    c = coxeter_word(W, c)
    g = coxeter_element(W, c)
    M = [[g.cols[j][k] + (1 if j == k else 0) for j in range(3)] for k in range(3)]
    ker = nullspace(M)
    if len(ker) != 1:
        raise ValueError("the -1 eigenspace of c is not a line")
    z = ker[0]
    lead = next(x for x in z if x != 0)
    z = tuple(F.div(x, lead) for x in z)
    om = OmegaForm(W, c)
    alphas = W.simple_roots
    for a in range(3):
        for b in range(a + 1, 3):
            i, j = c[a], c[b]
            w = F.sign(om(alphas[i], alphas[j]))
            if w == 0:
                continue
            if F.sign(det3(alphas[i], alphas[j], z)) != w:
                z = tuple(-x for x in z)
            return z
    return z
