"""Coxeter matrices, generalized Cartan matrices and symmetrizing weights."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import field as F

INF = math.inf


class CartanError(ValueError):
    """Base class for invalid Cartan data."""


class NotCartan(CartanError):
    """A defining condition (i), (ii) or (iii) of a generalized Cartan matrix fails."""

    def __init__(self, condition: str, message: str):
        super().__init__(f"condition ({condition}): {message}")
        self.condition = condition


class NotSymmetrizable(CartanError):
    """No positive weights delta with delta(s) a_ss' = delta(s') a_s's exist."""


class DeltaConflict(CartanError):
    """The symmetrizing weights differ on two conjugate simple generators."""


class UnsupportedLabel(CartanError):
    """A Coxeter label has no canonical exact Cartan entries."""

    def __init__(self, label):
        super().__init__(f"no standard Cartan entries for m = {label}")
        self.label = label


# 4cos^2(pi/m) for every m whose value lies in a quadratic field
def _four_cos_squared():
    return {
        2: 0, 3: 1, 4: 2, 6: 3,
        5: F.surd(Fraction(3, 2), Fraction(1, 2), 5),
        8: F.surd(2, 1, 2),
        10: F.surd(Fraction(5, 2), Fraction(1, 2), 5),
        12: F.surd(2, 1, 3),
    }


FOUR_COS_SQUARED = _four_cos_squared()


def four_cos_squared(m) -> F.Number | None:
    """Exact ``4cos^2(pi/m)``, or None when it is not quadratic over Q."""
    return FOUR_COS_SQUARED.get(m)


@dataclass(frozen=True)
class CoxeterMatrix:
    """Generator names and the symmetric table of labels m(s, s').

    Infinite labels are stored as ``math.inf``.
    """

    generators: tuple[str, ...]
    m: tuple[tuple, ...]

    def __post_init__(self):
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise ValueError("generator names must be distinct")
        for g in self.generators:
            if not g or "," in g or g != g.strip():
                raise ValueError(f"bad generator name {g!r}")
        if len(self.m) != n or any(len(row) != n for row in self.m):
            raise ValueError("Coxeter matrix must be square and match the generators")
        for i in range(n):
            if self.m[i][i] != 1:
                raise ValueError("Coxeter matrix must have 1 on the diagonal")
            for j in range(n):
                if i == j:
                    continue
                x = self.m[i][j]
                if x != self.m[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                if not (x == INF or (isinstance(x, int) and x >= 2)):
                    raise ValueError(f"off-diagonal labels must be >= 2 or infinity, got {x!r}")

    @classmethod
    def from_table(cls, generators: Sequence[str], table) -> "CoxeterMatrix":
        """Build from a nested list where 0 (or None, or inf) encodes infinity."""
        rows = []
        for row in table:
            rows.append(tuple(INF if (x == 0 or x is None or x == INF) else int(x) for x in row))
        return cls(tuple(generators), tuple(rows))

    @classmethod
    def from_edges(cls, generators: Sequence[str], edges: Mapping[tuple[str, str], object]) -> "CoxeterMatrix":
        """Build from ``{(s, t): m}``; unlisted pairs commute (m = 2)."""
        gens = tuple(generators)
        idx = {g: i for i, g in enumerate(gens)}
        n = len(gens)
        table = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for (s, t), lab in edges.items():
            lab = INF if lab in (0, None, INF) else int(lab)
            table[idx[s]][idx[t]] = table[idx[t]][idx[s]] = lab
        return cls(gens, tuple(tuple(r) for r in table))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def label(self, s, t):
        return self.m[self.index(s)][self.index(t)]

    def index(self, s) -> int:
        if isinstance(s, int):
            return s
        return self.generators.index(s)

    def to_table(self) -> list[list[int]]:
        return [[0 if x == INF else x for x in row] for row in self.m]


@dataclass(frozen=True)
class CartanData:
    """A validated symmetrizable generalized Cartan matrix with weights delta."""

    coxeter: CoxeterMatrix
    A: tuple[tuple, ...]
    delta: tuple
    d: int = 1
    sym: tuple[tuple, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.coxeter.rank
        sym = tuple(tuple(self.delta[i] * self.A[i][j] for j in range(n)) for i in range(n))
        object.__setattr__(self, "sym", sym)

    @property
    def generators(self) -> tuple[str, ...]:
        return self.coxeter.generators

    @property
    def rank(self) -> int:
        return self.coxeter.rank

    def K(self, x, y):
        """Symmetric form K(x, y) for vectors in simple-root coordinates."""
        n = self.rank
        total = 0
        for i in range(n):
            if x[i] == 0:
                continue
            row = self.sym[i]
            acc = 0
            for j in range(n):
                if y[j] != 0 and row[j] != 0:
                    acc = acc + row[j] * y[j]
            total = total + x[i] * acc
        return total

    def delta_map(self) -> dict[str, F.Number]:
        return dict(zip(self.generators, self.delta))


def coxeter_components(m: CoxeterMatrix) -> list[list[int]]:
    """Connected components of the Coxeter graph (edges where m > 2)."""
    return _components(m.rank, lambda i, j: m.m[i][j] != 2)


def _components(n, adjacent) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        comp, stack = [], [start]
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j != i and not seen[j] and adjacent(i, j):
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def simple_conjugacy_classes(m: CoxeterMatrix) -> list[list[str]]:
    """Partition S into conjugacy classes: components of the odd-label graph."""
    comps = _components(m.rank, lambda i, j: m.m[i][j] != INF and m.m[i][j] % 2 == 1)
    return [[m.generators[i] for i in c] for c in comps]


def _field_of_table(A) -> int:
    ds = {F.field_of(x) for row in A for x in row} - {1}
    if len(ds) > 1:
        raise F.FieldMismatch(f"entries from several quadratic fields: {sorted(ds)}")
    return ds.pop() if ds else 1


def validate_cartan(A, m: CoxeterMatrix, delta: Sequence | Mapping | None = None) -> CartanData:
    """Check the Cartan conditions and compute symmetrizing weights.

    ``delta`` may be supplied to override the default normalization (delta = 1
    on the first generator of each connected component of the Coxeter graph).
    """
    n = m.rank
    A = tuple(tuple(F.exact(x) for x in row) for row in A)
    if len(A) != n or any(len(row) != n for row in A):
        raise ValueError("Cartan matrix shape does not match the Coxeter matrix")
    d = _field_of_table(A)

    for i in range(n):
        if A[i][i] != 2:
            raise NotCartan("i", f"a_ss = {A[i][i]} for s = {m.generators[i]}")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            a, b = A[i][j], A[j][i]
            si, sj = m.generators[i], m.generators[j]
            if (a == 0) != (b == 0):
                raise NotCartan("iii", f"a_{si}{sj} = {a} but a_{sj}{si} = {b}")
            if F.sign(a) > 0:
                raise NotCartan("ii", f"a_{si}{sj} = {a} is positive")
            if i > j:
                continue
            prod = a * b
            lab = m.m[i][j]
            if lab == INF:
                if F.sign(prod - 4) < 0:
                    raise NotCartan("ii", f"product {prod} < 4 for m({si},{sj}) = infinity")
            else:
                target = four_cos_squared(lab)
                if target is None or prod != target:
                    raise NotCartan("ii", f"product {prod} != 4cos^2(pi/{lab}) for ({si},{sj})")

    if delta is None:
        weights = _solve_delta(A, m)
    else:
        if isinstance(delta, Mapping):
            delta = [delta[g] for g in m.generators]
        weights = tuple(F.exact(x) for x in delta)
        if len(weights) != n or any(F.sign(x) <= 0 for x in weights):
            raise NotSymmetrizable("delta must be positive on every generator")
        for i in range(n):
            for j in range(n):
                if weights[i] * A[i][j] != weights[j] * A[j][i]:
                    raise NotSymmetrizable(
                        f"delta({m.generators[i]}) a_{m.generators[i]}{m.generators[j]} "
                        f"!= delta({m.generators[j]}) a_{m.generators[j]}{m.generators[i]}")

    for cls in simple_conjugacy_classes(m):
        vals = {weights[m.index(g)] for g in cls}
        if len(vals) > 1:
            raise DeltaConflict(f"delta is not constant on the conjugacy class {cls}")
    return CartanData(m, A, weights, d)


def _solve_delta(A, m: CoxeterMatrix) -> tuple:
    n = m.rank
    weights: list = [None] * n
    for comp in coxeter_components(m):
        weights[comp[0]] = 1
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if j == i or A[i][j] == 0:
                    continue
                want = F.div(weights[i] * A[i][j], A[j][i])
                if weights[j] is None:
                    weights[j] = want
                    stack.append(j)
                elif weights[j] != want:
                    raise NotSymmetrizable(
                        f"inconsistent weights around generator {m.generators[j]}")
    return tuple(weights)


def standard_entries(label) -> tuple:
    """Canonical (a_ss', a_s's) for the earlier generator s and the later s'."""
    if label == INF:
        return (-2, -2)
    table = {2: (0, 0), 3: (-1, -1), 4: (-1, -2), 6: (-1, -3)}
    if label in table:
        return table[label]
    if label == 5:
        golden = F.surd(Fraction(-1, 2), Fraction(-1, 2), 5)
        return (golden, golden)
    raise UnsupportedLabel(label)


def standard_crystallographic_cartan(m: CoxeterMatrix) -> CartanData:
    """Integer Cartan matrix for labels 2, 3, 4, 6, infinity; golden entries for 5."""
    n = m.rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            A[i][j], A[j][i] = standard_entries(m.m[i][j])
    return validate_cartan(A, m)
