"""Lower-bound certificates for the optimal two-disk radius.

Any two disks covering a polygon also cover every segment and every triangle
spanned by its vertices. Two disks covering a segment need radius at least a
quarter of its length; of any three vertices two share a disk, so the radius
is at least half the shortest side of the triangle they form.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

from .errors import DegenerateError
from .geom import Point, Segment, dist
from .polygon import ConvexPolygon
from .stream import CoverSolution

Triangle = tuple[Point, Point, Point]


@dataclass(frozen=True)
class ExtremeSubpolygon:
    kind: str  # "quad", "triangle" or "segment"
    vertices: tuple[Point, ...]
    # vertex indices into the source polygon, ring order
    indices: tuple[int, ...] = ()


@dataclass(frozen=True)
class LowerBoundCert:
    rho: float
    witness: Union[Segment, Triangle]

    @property
    def kind(self) -> str:
        return "segment" if isinstance(self.witness, Segment) else "triangle"


_KINDS = {4: "quad", 3: "triangle", 2: "segment", 1: "point"}


def _extreme_candidates(v) -> list[list[int]]:
    xs = [p.x for p in v]
    ys = [p.y for p in v]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    return [
        [i for i, x in enumerate(xs) if x == lo_x],
        [i for i, x in enumerate(xs) if x == hi_x],
        [i for i, y in enumerate(ys) if y == lo_y],
        [i for i, y in enumerate(ys) if y == hi_y],
    ]


def _rho_of(pts) -> tuple[float, Union[Segment, Triangle]]:
    best_tri = (-1.0, None)
    for a, b, c in itertools.combinations(pts, 3):
        ell = min(dist(a, b), dist(b, c), dist(a, c))
        if ell / 2 > best_tri[0]:
            best_tri = (ell / 2, (a, b, c))
    best_seg = (-1.0, None)
    for a, b in itertools.combinations(pts, 2):
        if dist(a, b) / 4 > best_seg[0]:
            best_seg = (dist(a, b) / 4, Segment(a, b))
    if best_tri[1] is not None and best_tri[0] >= best_seg[0]:
        return best_tri
    return best_seg


def extreme_subpolygon(p: ConvexPolygon) -> ExtremeSubpolygon:
    """Vertices touching the four sides of the axis-aligned bounding box.

    When a side touches an edge there are two candidate vertices; the choice
    maximizes the number of distinct vertices, then the resulting bound, then
    takes the first in enumeration order.
    """
    v = p.vertices
    best = None
    for combo in itertools.product(*_extreme_candidates(v)):
        idx = tuple(sorted(set(combo)))
        rho = _rho_of([v[i] for i in idx])[0] if len(idx) > 1 else 0.0
        key = (len(idx), rho)
        if best is None or key > best[0]:
            best = (key, idx)
    idx = best[1]
    return ExtremeSubpolygon(_KINDS[len(idx)], tuple(v[i] for i in idx), idx)


def lower_bound_rho(sub: ExtremeSubpolygon) -> LowerBoundCert:
    if len(sub.vertices) < 2:
        return LowerBoundCert(0.0, Segment(sub.vertices[0], sub.vertices[0]))
    rho, witness = _rho_of(sub.vertices)
    return LowerBoundCert(rho, witness)


def polygon_rho(p: ConvexPolygon) -> LowerBoundCert:
    return lower_bound_rho(extreme_subpolygon(p))


def certified_ratio(sol: CoverSolution, cert: LowerBoundCert) -> float:
    """Upper bound on radius / optimal radius, valid because rho never exceeds the optimum."""
    if cert.rho <= 0:
        raise DegenerateError("lower bound is zero; the ratio is undefined")
    return sol.radius / cert.rho
