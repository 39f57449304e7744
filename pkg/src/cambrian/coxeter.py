"""Coxeter groups acting on root space by exact matrices.

An element is stored by the images of the simple roots (its columns) together
with the columns of its inverse. Equality is matrix equality; the reduced word
is derived from the matrix on demand.
"""
from __future__ import annotations

from typing import Iterable, Sequence, Union

from . import field as F
from .cartan import CartanData, CoxeterMatrix, standard_crystallographic_cartan
from .linalg import det

Root = tuple
WordLike = Union[str, Sequence]


class UnknownGenerator(KeyError):
    """A word mentions a name that is not a simple generator."""


class InfiniteGroup(ValueError):
    """An operation that needs a finite (parabolic) group was given an infinite one."""


def vec_sign(v: Sequence) -> int:
    """Sign of the first nonzero coordinate (the sign of a root)."""
    for x in v:
        if x != 0:
            return F.sign(x)
    return 0


def is_positive(v: Sequence) -> bool:
    """All coordinates nonnegative and at least one positive."""
    signs = [F.sign(x) for x in v]
    return all(s >= 0 for s in signs) and any(s > 0 for s in signs)


def neg(v: Sequence) -> Root:
    return tuple(-x for x in v)


def positive(v: Sequence) -> Root:
    """The positive representative of ``±v``."""
    return tuple(v) if vec_sign(v) > 0 else neg(v)


class CoxeterGroup:
    """A Coxeter group with a fixed symmetrizable Cartan matrix."""

    def __init__(self, cartan: CartanData):
        self.cartan = cartan
        self.generators: tuple[str, ...] = cartan.generators
        self.n = cartan.rank
        self.A = cartan.A
        self.delta = cartan.delta
        self._index = {g: i for i, g in enumerate(self.generators)}
        self._layers: list[list[Element]] = []
        self._seen: dict = {}
        self.identity = self._make(self._unit(), self._unit())
        self.identity._word = ()
        self.simple = []
        for i in range(self.n):
            cols = tuple(self._simple_apply(i, e) for e in self._unit())
            g = self._make(cols, cols)
            g._word = (i,)
            self.simple.append(g)
        self.simple_roots = self._unit()

    @classmethod
    def from_coxeter_matrix(cls, m: CoxeterMatrix) -> "CoxeterGroup":
        return cls(standard_crystallographic_cartan(m))

    # basic plumbing -------------------------------------------------------
    def _unit(self) -> tuple:
        n = self.n
        return tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))

    def _make(self, cols, icols) -> "Element":
        return Element(self, cols, icols)

    def _simple_apply(self, i: int, x: Sequence) -> Root:
        """s_i(x) = x - (sum_j a_ij x_j) alpha_i."""
        row = self.A[i]
        c = 0
        for j in range(self.n):
            if x[j] != 0 and row[j] != 0:
                c = c + row[j] * x[j]
        if c == 0:
            return tuple(x)
        out = list(x)
        out[i] = out[i] - c
        return tuple(out)

    def index(self, s) -> int:
        if isinstance(s, int):
            if not 0 <= s < self.n:
                raise UnknownGenerator(s)
            return s
        try:
            return self._index[s]
        except KeyError:
            raise UnknownGenerator(s) from None

    def parse_word(self, word: WordLike) -> tuple[int, ...]:
        """Generator indices of a word.

        Accepts comma-separated names ("p,q,r"), a run of single-character
        names ("pqr"), or a sequence of names or indices.
        """
        if isinstance(word, Element):
            return word.word
        if isinstance(word, str):
            text = word.strip()
            if text in ("", "e"):
                return ()
            if "," in text:
                parts = [p.strip() for p in text.split(",")]
            elif text in self._index:
                parts = [text]
            else:
                parts = list(text)
            return tuple(self.index(p) for p in parts)
        return tuple(self.index(p) for p in word)

    def format_word(self, word: Sequence[int], sep: str = ",") -> str:
        return sep.join(self.generators[i] for i in word)

    def name(self, word: Sequence[int]) -> str:
        """Compact display: concatenated names, or "e" for the empty word."""
        if not word:
            return "e"
        sep = "" if all(len(g) == 1 for g in self.generators) else ","
        return self.format_word(word, sep)

    def __call__(self, word: WordLike) -> "Element":
        return self.from_word(word)

    def from_word(self, word: WordLike) -> "Element":
        g = self.identity
        for i in self.parse_word(word):
            g = g.right_mul_simple(i)
        return g

    def __repr__(self):
        return f"CoxeterGroup({','.join(self.generators)})"

    # forms and roots ------------------------------------------------------
    def K(self, x, y):
        return self.cartan.K(x, y)

    def coroot_coefficient(self, beta: Sequence, x: Sequence):
        """K(beta^vee, x) = 2 K(beta, x) / K(beta, beta)."""
        return F.div(2 * self.K(beta, x), self.K(beta, beta))

    def reflect(self, beta: Sequence, x: Sequence) -> Root:
        """The reflection in ``beta`` applied to ``x``."""
        c = self.coroot_coefficient(beta, x)
        if c == 0:
            return tuple(x)
        return tuple(a - c * b for a, b in zip(x, beta))

    def reflection(self, beta: Sequence) -> "Element":
        """The reflection t with root beta_t = +-beta."""
        cols = tuple(self.reflect(beta, e) for e in self._unit())
        return self._make(cols, cols)

    def is_finite(self) -> bool:
        """W is finite iff K is positive definite (leading principal minors)."""
        sym = self.cartan.sym
        for k in range(1, self.n + 1):
            if F.sign(det([row[:k] for row in sym[:k]])) <= 0:
                return False
        return True

    # enumeration -----------------------------------------------------------
    def elements(self, max_length: int, J: Iterable | None = None) -> list["Element"]:
        """All elements of length <= max_length (of W_J when J is given).

        Sorted by (length, canonical word).
        """
        if J is not None:
            J = sorted(self.index(s) for s in J)
            return _bfs(self, J, max_length)
        while len(self._layers) <= max_length:
            k = len(self._layers)
            if k == 0:
                layer = [self.identity]
            else:
                prev = self._layers[k - 1]
                layer = []
                for g in prev:
                    for i in range(self.n):
                        if not g.is_right_descent(i):
                            h = g.right_mul_simple(i)
                            key = h.key
                            if key not in self._seen:
                                self._seen[key] = h
                                layer.append(h)
                layer.sort(key=lambda g: g.word)
            for g in layer:
                self._seen.setdefault(g.key, g)
            self._layers.append(layer)
            if not layer:
                break
        out = []
        for layer in self._layers[: max_length + 1]:
            out.extend(layer)
        return out

    def all_elements(self, cap: int = 10_000) -> list["Element"]:
        """Every element of a finite group."""
        if not self.is_finite():
            raise InfiniteGroup("group is infinite")
        k = 0
        while True:
            els = self.elements(k)
            if len(self._layers) > k and not self._layers[k]:
                return els
            k += 1
            if len(els) > cap:
                raise InfiniteGroup("element cap exceeded")

    def longest_element(self, J: Iterable | None = None, cap: int = 1000) -> "Element":
        """w_0(J) for a finite parabolic subgroup W_J."""
        J = list(range(self.n)) if J is None else [self.index(s) for s in J]
        g = self.identity
        steps = 0
        while True:
            ascent = next((i for i in J if not g.is_right_descent(i)), None)
            if ascent is None:
                return g
            g = g.right_mul_simple(ascent)
            steps += 1
            if steps > cap:
                raise InfiniteGroup(f"W_J is infinite or longer than {cap}")

    def reflections(self, max_length: int) -> list[Root]:
        """Positive roots of reflections t with l(t) <= max_length, in order found."""
        out, seen = [], set()
        for g in self.elements(max_length):
            for beta in g.reflection_sequence():
                if beta not in seen:
                    seen.add(beta)
                    if self.reflection(beta).length <= max_length:
                        out.append(beta)
        return out


def _bfs(W: CoxeterGroup, J: list[int], max_length: int) -> list["Element"]:
    layer = [W.identity]
    out = [W.identity]
    seen = {W.identity.key}
    for _ in range(max_length):
        nxt = []
        for g in layer:
            for i in J:
                if not g.is_right_descent(i):
                    h = g.right_mul_simple(i)
                    if h.key not in seen:
                        seen.add(h.key)
                        nxt.append(h)
        if not nxt:
            break
        nxt.sort(key=lambda g: g.word)
        out.extend(nxt)
        layer = nxt
    return out


class Element:
    """An element of a Coxeter group, stored as an exact matrix."""

    __slots__ = ("group", "cols", "icols", "_word", "_inv", "_seq", "_hash")

    def __init__(self, group: CoxeterGroup, cols: tuple, icols: tuple):
        self.group = group
        self.cols = cols
        self.icols = icols
        self._word = None
        self._inv = None
        self._seq = None
        self._hash = None

    # identity --------------------------------------------------------------
    @property
    def key(self) -> tuple:
        return self.cols

    def __eq__(self, other):
        return isinstance(other, Element) and self.cols == other.cols

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.cols)
        return self._hash

    def __repr__(self):
        return f"Element({self.group.name(self.word)})"

    def __str__(self):
        return self.group.name(self.word)

    # descents and words -------------------------------------------------------
    def is_right_descent(self, i: int) -> bool:
        """l(w s_i) < l(w), i.e. w(alpha_i) is negative."""
        return vec_sign(self.cols[i]) < 0

    def is_left_descent(self, i: int) -> bool:
        """l(s_i w) < l(w), i.e. w^-1(alpha_i) is negative."""
        return vec_sign(self.icols[i]) < 0

    def right_descents(self) -> list[int]:
        return [i for i in range(self.group.n) if self.is_right_descent(i)]

    def left_descents(self) -> list[int]:
        return [i for i in range(self.group.n) if self.is_left_descent(i)]

    @property
    def word(self) -> tuple[int, ...]:
        """Canonical reduced word: strip the smallest right descent repeatedly."""
        if self._word is None:
            rev = []
            g = self
            while True:
                i = next((k for k in range(g.group.n) if g.is_right_descent(k)), None)
                if i is None:
                    break
                rev.append(i)
                g = g.right_mul_simple(i)
            self._word = tuple(reversed(rev))
        return self._word

    @property
    def length(self) -> int:
        return len(self.word)

    def __len__(self):
        return self.length

    def word_str(self, sep: str = ",") -> str:
        return self.group.format_word(self.word, sep)

    # products -------------------------------------------------------------
    def right_mul_simple(self, i: int) -> "Element":
        W = self.group
        row = W.A[i]
        ci = self.cols[i]
        cols = []
        for j, cj in enumerate(self.cols):
            a = row[j]
            if j == i:
                cols.append(tuple(-x for x in ci))
            elif a == 0:
                cols.append(cj)
            else:
                cols.append(tuple(x - a * y for x, y in zip(cj, ci)))
        icols = tuple(W._simple_apply(i, c) for c in self.icols)
        return Element(W, tuple(cols), icols)

    def left_mul_simple(self, i: int) -> "Element":
        W = self.group
        row = W.A[i]
        ci = self.icols[i]
        icols = []
        for j, cj in enumerate(self.icols):
            a = row[j]
            if j == i:
                icols.append(tuple(-x for x in ci))
            elif a == 0:
                icols.append(cj)
            else:
                icols.append(tuple(x - a * y for x, y in zip(cj, ci)))
        cols = tuple(W._simple_apply(i, c) for c in self.cols)
        return Element(W, cols, tuple(icols))

    def __mul__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        if other.group is not self.group:
            raise ValueError("elements of different groups")
        cols = tuple(self.apply(c) for c in other.cols)
        icols = tuple(other.apply_inverse(c) for c in self.icols)
        return Element(self.group, cols, icols)

    def inverse(self) -> "Element":
        return Element(self.group, self.icols, self.cols)

    def conjugate(self, t: "Element") -> "Element":
        """self * t * self^-1."""
        return self * t * self.inverse()

    # actions ----------------------------------------------------------------
    def apply(self, x: Sequence) -> Root:
        """Action on V: coordinates in the simple-root basis."""
        n = self.group.n
        out = [0] * n
        for j, xj in enumerate(x):
            if xj == 0:
                continue
            col = self.cols[j]
            for k in range(n):
                if col[k] != 0:
                    out[k] = out[k] + xj * col[k]
        return tuple(out)

    def apply_inverse(self, x: Sequence) -> Root:
        return Element(self.group, self.icols, self.cols).apply(x)

    def apply_dual(self, p: Sequence) -> tuple:
        """Action on V*, points given by their pairings with the simple roots."""
        return tuple(_dot(c, p) for c in self.icols)

    # inversions -------------------------------------------------------------
    def reflection_sequence(self) -> list[Root]:
        """Roots of t_i = a_1...a_i...a_1 for the canonical word a_1...a_k."""
        if self._seq is None:
            W = self.group
            seq = []
            g = W.identity
            for i in self.word:
                seq.append(g.cols[i])
                g = g.right_mul_simple(i)
            self._seq = seq
        return list(self._seq)

    @property
    def inversions(self) -> frozenset:
        """Positive roots of the (left) inversions of this element."""
        if self._inv is None:
            self._inv = frozenset(self.reflection_sequence())
        return self._inv

    def has_inversion(self, beta: Sequence) -> bool:
        """t is an inversion iff w^-1(beta_t) is negative."""
        return vec_sign(self.apply_inverse(beta)) < 0

    def cover_reflections(self) -> list[Root]:
        """Roots of w s w^-1 for each right descent s."""
        return [positive(self.cols[i]) for i in self.right_descents()]

    def in_parabolic(self, J: Iterable) -> bool:
        Jset = {self.group.index(s) for s in J}
        return all(i in Jset for i in self.word)


def _dot(x, y):
    total = 0
    for a, b in zip(x, y):
        if a != 0 and b != 0:
            total = total + a * b
    return total


# module-level operations ---------------------------------------------------

def apply(g: Element, r: Sequence) -> Root:
    return g.apply(r)


def multiply(g: Element, h: Element) -> Element:
    return g * h


def invert(g: Element) -> Element:
    return g.inverse()


def length_and_inversions(g: Element) -> tuple[int, frozenset]:
    return g.length, g.inversions


def cover_reflections(g: Element) -> list[Root]:
    return g.cover_reflections()


def parabolic_factorization(g: Element, J: Iterable) -> tuple[Element, Element]:
    """w = w_J * (J)w with w_J in W_J and (J)w minimal in its coset W_J w."""
    W = g.group
    J = [W.index(s) for s in J]
    left = W.identity
    rest = g
    while True:
        i = next((k for k in J if rest.is_left_descent(k)), None)
        if i is None:
            return left, rest
        rest = rest.left_mul_simple(i)
        left = left.right_mul_simple(i)


def parabolic_project(g: Element, J: Iterable) -> Element:
    """w_J: the element of W_J with inv(w_J) = inv(w) restricted to W_J."""
    return parabolic_factorization(g, J)[0]


def min_coset_representative(g: Element, J: Iterable, side: str = "right") -> Element:
    """Minimal-length element of g W_J (side="right") or W_J g (side="left")."""
    W = g.group
    J = [W.index(s) for s in J]
    if side == "left":
        return parabolic_factorization(g, J)[1]
    if side != "right":
        raise ValueError("side must be 'left' or 'right'")
    rest = g
    while True:
        i = next((k for k in J if rest.is_right_descent(k)), None)
        if i is None:
            return rest
        rest = rest.right_mul_simple(i)
