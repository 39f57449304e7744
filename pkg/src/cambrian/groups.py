"""A small catalog of Coxeter groups and the JSON group-definition format."""
from __future__ import annotations

import json
from pathlib import Path

from . import field as F
from .cartan import (CoxeterMatrix, standard_crystallographic_cartan,
                     validate_cartan)
from .coxeter import CoxeterGroup

LETTERS = "pqrstuvwxyz"


def _chain(n: int, labels: list[int], names: str = LETTERS) -> CoxeterMatrix:
    gens = tuple(names[:n])
    edges = {(gens[i], gens[i + 1]): labels[i] for i in range(n - 1)}
    return CoxeterMatrix.from_edges(gens, edges)


def type_A(n: int) -> CoxeterGroup:
    """The symmetric group S_{n+1}, generators p, q, r, ... along a path."""
    return CoxeterGroup.from_coxeter_matrix(_chain(n, [3] * (n - 1)))


def type_B(n: int) -> CoxeterGroup:
    """Hyperoctahedral group; the first edge carries the label 4."""
    return CoxeterGroup.from_coxeter_matrix(_chain(n, [4] + [3] * (n - 2)))


def affine_A2() -> CoxeterGroup:
    """Generators p, q, r with every pair labelled 3."""
    return CoxeterGroup.from_coxeter_matrix(
        CoxeterMatrix.from_edges("pqr", {("p", "q"): 3, ("q", "r"): 3, ("p", "r"): 3}))


def affine_G2() -> CoxeterGroup:
    """Generators r, s, t with m(r,s) = 6, m(s,t) = 3, m(r,t) = 2."""
    return CoxeterGroup.from_coxeter_matrix(
        CoxeterMatrix.from_edges("rst", {("r", "s"): 6, ("s", "t"): 3}))


def hyperbolic_542() -> CoxeterGroup:
    """Generators r, s, t with m(r,s) = 5, m(s,t) = 4, m(r,t) = 2, over Q(sqrt 5)."""
    return CoxeterGroup.from_coxeter_matrix(
        CoxeterMatrix.from_edges("rst", {("r", "s"): 5, ("s", "t"): 4}))


def universal(n: int) -> CoxeterGroup:
    """Every pair of distinct generators labelled infinity."""
    gens = tuple(LETTERS[:n])
    edges = {(gens[i], gens[j]): 0 for i in range(n) for j in range(i + 1, n)}
    return CoxeterGroup.from_coxeter_matrix(CoxeterMatrix.from_edges(gens, edges))


CATALOG = {
    "A2": lambda: type_A(2),
    "A3": lambda: type_A(3),
    "A4": lambda: type_A(4),
    "B2": lambda: type_B(2),
    "B3": lambda: type_B(3),
    "affine-A2": affine_A2,
    "affine-G2": affine_G2,
    "hyperbolic-542": hyperbolic_542,
    "universal3": lambda: universal(3),
}


def group_from_json(obj: dict) -> CoxeterGroup:
    """Build a group from ``{"generators", "coxeter_matrix", "cartan"?, "d"?, "delta"?}``."""
    try:
        gens = obj["generators"]
        table = obj["coxeter_matrix"]
    except (KeyError, TypeError):
        raise ValueError("group definition needs 'generators' and 'coxeter_matrix'") from None
    m = CoxeterMatrix.from_table(gens, table)
    if "cartan" not in obj:
        return CoxeterGroup(standard_crystallographic_cartan(m))
    d = obj.get("d", 1)
    A = [[F.from_json(x, d) for x in row] for row in obj["cartan"]]
    delta = obj.get("delta")
    if delta is not None:
        delta = [F.from_json(x, d) for x in delta]
    return CoxeterGroup(validate_cartan(A, m, delta))


def group_to_json(W: CoxeterGroup) -> dict:
    out = {
        "generators": list(W.generators),
        "coxeter_matrix": W.cartan.coxeter.to_table(),
        "cartan": [[F.to_json(x) for x in row] for row in W.A],
        "delta": [F.to_json(x) for x in W.delta],
    }
    if W.cartan.d != 1:
        out["d"] = W.cartan.d
    return out


def load_group(source: str) -> CoxeterGroup:
    """A catalog name or a path to a JSON group definition."""
    if source in CATALOG:
        return CATALOG[source]()
    path = Path(source)
    if not path.exists():
        raise FileNotFoundError(f"no group file or catalog entry named {source!r}")
    with path.open() as fh:
        return group_from_json(json.load(fh))


def save_group(W: CoxeterGroup, path) -> None:
    with open(path, "w") as fh:
        json.dump(group_to_json(W), fh, indent=2, sort_keys=True)
        fh.write("\n")
