"""Deterministic SVG pictures of rank-3 Cambrian fans.

Chambers and walls are computed exactly; floating point enters only when a
point of V* is projected to the page.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import field as F
from .coxeter import CoxeterGroup
from .fan import NotInTits, chamber_point, chamber_rays, tits_membership
from .forms import RankNotThree
from .linalg import nullspace
from .sortable import Projection, _coxeter

PROJECTIONS = ("affine-slice", "stereographic", "poincare-disk")
SUBDIVISIONS = 8


class ProjectionUnavailable(ValueError):
    """The requested projection does not suit this group."""


@dataclass(frozen=True)
class RenderSpec:
    projection: str = "affine-slice"
    length_cap: int = 8
    highlight: str = "sortable"
    size: int = 800
    labels: bool = True


def _floats(p: Sequence) -> np.ndarray:
    return np.array([F.to_float(x) for x in p], dtype=float)


def _sym(W: CoxeterGroup) -> np.ndarray:
    return np.array([[F.to_float(x) for x in row] for row in W.cartan.sym], dtype=float)


def affine_slice(W: CoxeterGroup) -> Callable:
    """Slice the Tits cone of an affine group by <x, delta> = 1, with the Euclidean metric."""
    ker = nullspace([list(r) for r in W.cartan.sym])
    if len(ker) != 1:
        raise ProjectionUnavailable("affine-slice needs an affine group")
    delta = ker[0]
    if any(F.sign(x) < 0 for x in delta):
        delta = [-x for x in delta]
    if any(F.sign(x) <= 0 for x in delta):
        raise ProjectionUnavailable("affine-slice needs an affine group")
    d = _floats(delta)
    K = _sym(W)
    for k in reversed(range(3)):
        rest = [i for i in range(3) if i != k]
        sub = K[np.ix_(rest, rest)]
        if np.all(np.linalg.eigvalsh(sub) > 1e-12):
            break
    L = np.linalg.cholesky(sub)
    inv = np.linalg.inv(sub)

    def project(p: np.ndarray):
        h = float(d @ p)
        if h <= 1e-12:
            return None
        q = p / h
        u = inv @ q[rest]
        xy = L.T @ u
        return float(xy[0]), float(-xy[1])

    return project


def stereographic(W: CoxeterGroup) -> Callable:
    """Rays on the unit sphere, projected from the antipode of the centre of D."""
    if W.is_finite():
        G = np.linalg.inv(_sym(W))
    else:
        G = np.eye(3)
    Lt = np.linalg.cholesky(G).T
    n = Lt @ np.ones(3)
    n /= np.linalg.norm(n)
    basis = []
    for e in np.eye(3):
        v = e - (e @ n) * n - sum((e @ b) * b for b in basis)
        if np.linalg.norm(v) > 1e-9 and len(basis) < 2:
            basis.append(v / np.linalg.norm(v))

    def project(p: np.ndarray):
        y = Lt @ p
        norm = np.linalg.norm(y)
        if norm < 1e-12:
            return None
        q = y / norm
        denom = 1.0 + float(q @ n)
        if denom < 1e-6:
            return None
        return float(q @ basis[0]) / denom, float(-(q @ basis[1])) / denom

    return project


def poincare_disk(W: CoxeterGroup) -> Callable:
    """Hyperboloid model of the dual form, mapped to the Poincare disk."""
    K = _sym(W)
    vals = np.linalg.eigvalsh(K)
    if not (sum(vals < -1e-12) == 1 and sum(vals > 1e-12) == 2):
        raise ProjectionUnavailable("poincare-disk needs a form of signature (2,1)")
    probe = tuple(-x for x in chamber_point(W.identity))
    if not isinstance(tits_membership(W, probe, cap=200), NotInTits):
        raise ProjectionUnavailable("the Tits cone is not a proper cone")
    Q = np.linalg.inv(K)
    lam, vec = np.linalg.eigh(Q)
    order = np.argsort(lam)  # the negative direction first
    lam, vec = lam[order], vec[:, order]
    centre = sum(_floats(r) for r in chamber_rays(W.identity))
    if vec[:, 0] @ centre < 0:
        vec[:, 0] = -vec[:, 0]
    scale = np.sqrt(np.abs(lam))

    def project(p: np.ndarray):
        coords = (vec.T @ p) * scale
        t, x, y = coords
        if t <= 0:
            return None
        gap = t * t - x * x - y * y
        r = math.hypot(x, y)
        if gap <= 1e-12:
            return (x / r, -y / r) if r > 0 else None
        h = math.sqrt(gap)
        return x / (h + t), -y / (h + t)

    return project


def projector(W: CoxeterGroup, name: str) -> Callable:
    if W.n != 3:
        raise RankNotThree(f"rank is {W.n}")
    if name == "affine-slice":
        return affine_slice(W)
    if name == "stereographic":
        return stereographic(W)
    if name == "poincare-disk":
        return poincare_disk(W)
    raise ValueError(f"unknown projection {name!r}")


def _path(project: Callable, points: list[np.ndarray], closed: bool):
    out = []
    pairs = list(zip(points, points[1:] + points[:1])) if closed else list(zip(points, points[1:]))
    for a, b in pairs:
        for k in range(SUBDIVISIONS):
            q = project(a + (b - a) * (k / SUBDIVISIONS))
            if q is None:
                return None
            out.append(q)
    if not closed:
        q = project(points[-1])
        if q is None:
            return None
        out.append(q)
    return out


def render_svg(W: CoxeterGroup, c, spec: RenderSpec = RenderSpec()) -> str:
    """SVG of the chambers wD with l(w) <= cap, shading sortables and drawing Cambrian walls bold."""
    project = projector(W, spec.projection)
    c = _coxeter(W, c)
    pi = Projection(W, c)
    chambers = W.elements(spec.length_cap)
    polys, walls, labels = [], [], []
    for w in chambers:
        rays = [_floats(r) for r in chamber_rays(w)]
        path = _path(project, rays, closed=True)
        if path is None:
            continue
        v = pi(w)
        sortable = spec.highlight == "sortable" and v == w
        polys.append((w, path, sortable))
        if sortable and spec.labels:
            centre = project(_floats(chamber_point(w)))
            if centre is not None:
                labels.append((w, centre))
        for s in range(3):
            u = w.right_mul_simple(s)
            if u.length < w.length and u.length <= spec.length_cap:
                continue  # each wall once, from the shorter side
            if pi(u) == v:
                continue
            wall = [rays[k] for k in range(3) if k != s]
            seg = _path(project, wall, closed=False)
            if seg is not None:
                walls.append(seg)

    pts = [p for _, path, _ in polys for p in path] or [(0.0, 0.0)]
    if spec.projection == "poincare-disk":
        lo_x, hi_x, lo_y, hi_y = -1.0, 1.0, -1.0, 1.0
    else:
        lo_x, hi_x = min(p[0] for p in pts), max(p[0] for p in pts)
        lo_y, hi_y = min(p[1] for p in pts), max(p[1] for p in pts)
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    margin = 0.04 * spec.size
    k = (spec.size - 2 * margin) / span

    def xy(p):
        return "%.3f,%.3f" % (margin + (p[0] - lo_x) * k, margin + (p[1] - lo_y) * k)

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" viewBox="0 0 %d %d">'
        % (spec.size, spec.size, spec.size, spec.size),
        "<title>Cambrian fan, c = %s, %s, length &lt;= %d</title>"
        % (W.format_word(c, ""), spec.projection, spec.length_cap),
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if spec.projection == "poincare-disk":
        centre = xy((0.0, 0.0)).split(",")
        lines.append('<circle cx="%s" cy="%s" r="%.3f" fill="none" stroke="black" stroke-width="1"/>'
                     % (centre[0], centre[1], k))
    for w, path, sortable in polys:
        cls = "sortable" if sortable else "chamber"
        fill = "#c8c8c8" if sortable else "none"
        lines.append('<polygon class="%s" data-word="%s" points="%s" fill="%s" stroke="#888" stroke-width="0.5"/>'
                     % (cls, w.word_str(""), " ".join(xy(p) for p in path), fill))
    for seg in walls:
        lines.append('<polyline class="wall" points="%s" fill="none" stroke="black" stroke-width="2.5"/>'
                     % " ".join(xy(p) for p in seg))
    for w, p in labels:
        x, y = xy(p).split(",")
        lines.append('<text x="%s" y="%s" font-size="9" text-anchor="middle">%s</text>'
                     % (x, y, w.word_str("") or "e"))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def shaded_words(svg: str) -> list[str]:
    """The data-word of every shaded polygon, in document order."""
    return re.findall(r'<polygon class="sortable" data-word="([^"]*)"', svg)
