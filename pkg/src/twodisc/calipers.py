"""Polygon diameter by rotating calipers."""
from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import TooFewPointsError
from .geom import Point, dist
from .polygon import ConvexPolygon


class DiameterResult(NamedTuple):
    i: int
    j: int
    length: float
    direction: tuple[float, float]


def _result(v: Sequence[Point], i: int, j: int, length: float) -> DiameterResult:
    dx, dy = v[j].x - v[i].x, v[j].y - v[i].y
    return DiameterResult(i, j, length, (dx / length, dy / length) if length > 0 else (1.0, 0.0))


def antipodal_candidates(v: Sequence[Point]) -> set[tuple[int, int]]:
    """Index pairs ``(i, j)``, ``i < j``, that include every antipodal pair of a CCW ring.

    For each edge the pointer ``j`` sits on the vertex farthest from the edge's
    line; its neighbours are added too so rounding near parallel edges cannot
    hide a pair. The pointer only moves forward, so the scan is linear.
    """
    n = len(v)
    if n == 2:
        return {(0, 1)}

    def height(i, j):
        # twice the area of (v_i, v_i+1, v_j)
        a, b, c = v[i], v[(i + 1) % n], v[j % n]
        return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)

    pairs = set()
    j = 1
    steps = 0
    for i in range(n):
        while height(i, j + 1) > height(i, j) and steps < 2 * n:
            j += 1
            steps += 1
        for a in (i, (i + 1) % n):
            for b in (j - 1, j, j + 1):
                b %= n
                if a != b:
                    pairs.add((min(a, b), max(a, b)))
    return pairs


def diameter(p: ConvexPolygon) -> DiameterResult:
    """Farthest vertex pair; exact ties go to the lexicographically smallest pair."""
    v = p.vertices
    if len(v) < 2:
        raise TooFewPointsError("diameter needs at least two vertices")
    best = None
    for i, j in antipodal_candidates(v):
        d = dist(v[i], v[j])
        key = (-d, i, j)
        if best is None or key < best:
            best = key
    return _result(v, best[1], best[2], -best[0])


def brute_diameter(p: ConvexPolygon) -> DiameterResult:
    v = p.vertices
    if len(v) < 2:
        raise TooFewPointsError("diameter needs at least two vertices")
    best = (-1.0, 0, 1)
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            d = dist(v[i], v[j])
            if d > best[0]:
                best = (d, i, j)
    return _result(v, best[1], best[2], best[0])
