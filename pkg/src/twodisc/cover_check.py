"""Decide whether two disks cover a convex polygon.

Checking the boundary is enough: if an interior point x lay outside both
disks, the directions from x that hit a given disk fill an arc shorter than
a half turn, so two such arcs miss some ray from x, and that ray leaves the
polygon through an uncovered boundary point.
"""
from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from .geom import EPS_GEOM, Disk, Point, Segment, disk_contains, segment_disk_interval
from .polygon import ConvexPolygon
from .stream import CoverSolution


class EdgeCoverage(NamedTuple):
    covered: bool
    witness: Optional[float]


class PolygonCoverage(NamedTuple):
    covered: bool
    witness: Optional[Point]

    def __bool__(self):
        return self.covered


def edge_coverage(s: Segment, d1: Disk, d2: Disk, eps: float = EPS_GEOM) -> EdgeCoverage:
    """Whether the union of both disks, each grown by ``eps``, contains ``s``.

    On failure the witness is the parameter at the middle of the widest gap.
    """
    grown = (Disk(d1.center, d1.radius + eps), Disk(d2.center, d2.radius + eps))
    if s.p == s.q:
        ok = any(disk_contains(d, s.p, eps) for d in (d1, d2))
        return EdgeCoverage(ok, None if ok else 0.0)
    spans = sorted(iv for iv in (segment_disk_interval(s, d) for d in grown) if iv is not None)
    gaps = []
    reach = 0.0
    for lo, hi in spans:
        if lo > reach:
            gaps.append((reach, lo))
        reach = max(reach, hi)
    if reach < 1.0:
        gaps.append((reach, 1.0))
    if not gaps:
        return EdgeCoverage(True, None)
    lo, hi = max(gaps, key=lambda g: g[1] - g[0])
    return EdgeCoverage(False, (lo + hi) / 2)


def polygon_covered(
    p: ConvexPolygon, sol: CoverSolution, eps: float = EPS_GEOM, grid: int = 0
) -> PolygonCoverage:
    """Exact boundary test; ``grid > 0`` adds a redundant ``grid x grid`` interior scan."""
    d1, d2 = sol.disks
    for e in p.edges():
        res = edge_coverage(e, d1, d2, eps)
        if not res.covered:
            return PolygonCoverage(False, e.at(res.witness))
    if grid > 0:
        miss = interior_grid_miss(p, d1, d2, eps, grid)
        if miss is not None:
            return PolygonCoverage(False, miss)
    return PolygonCoverage(True, None)


def interior_grid_miss(p: ConvexPolygon, d1: Disk, d2: Disk, eps: float, grid: int) -> Optional[Point]:
    """First grid point strictly inside ``p`` that neither disk contains, if any."""
    v = np.array(p.vertices)
    lo, hi = v.min(axis=0), v.max(axis=0)
    gx, gy = np.meshgrid(np.linspace(lo[0], hi[0], grid), np.linspace(lo[1], hi[1], grid))
    pts = np.stack((gx.ravel(), gy.ravel()), axis=1)
    inside = np.ones(len(pts), dtype=bool)
    for a, b in zip(v, np.roll(v, -1, axis=0)):
        c = (b[0] - a[0]) * (pts[:, 1] - a[1]) - (b[1] - a[1]) * (pts[:, 0] - a[0])
        inside &= c > 0
    miss = inside.copy()
    for d in (d1, d2):
        r = np.hypot(pts[:, 0] - d.center.x, pts[:, 1] - d.center.y)
        miss &= r > d.radius + eps
    hits = np.flatnonzero(miss)
    if hits.size == 0:
        return None
    x, y = pts[hits[0]]
    return Point(x, y)
