"""Reference two-center radius for measuring approximation ratios.

:func:`arc_two_center` samples the boundary and splits the cyclic sample into
two contiguous arcs, minimizing the larger of their enclosing-circle radii.
Any disk pair covering the polygon covers the samples, so the result never
exceeds the optimum. Growing both disks by half the largest gap between
consecutive samples covers the whole boundary, hence the polygon, so the
optimum lies in ``[radius, radius + max_gap / 2]``.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import DegenerateError
from .geom import Disk, Point, min_enclosing_circle
from .polygon import ConvexPolygon, sample_boundary
from .stream import CoverSolution

DEFAULT_M = 256


@dataclass(frozen=True)
class OracleResult:
    radius: float
    split: tuple[int, int]
    m: int
    disks: tuple[Disk, Disk]
    max_gap: float = 0.0

    @property
    def upper(self) -> float:
        """Radius of a cover of the sampled boundary, when the samples are a polygon boundary."""
        return self.radius + self.max_gap / 2


def _arrays(points: Sequence[Point]) -> tuple[np.ndarray, np.ndarray]:
    arr = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])


def _search(xs, ys, threads: int) -> tuple[float, int, int]:
    m = xs.shape[0]
    if threads <= 1 or m < 64:
        return _kernels.best_split_search(xs, ys, 0, m - 1)
    bounds = np.linspace(0, m - 1, threads + 1).astype(int)
    with ThreadPoolExecutor(threads) as pool:
        parts = list(pool.map(lambda k: _kernels.best_split_search(xs, ys, bounds[k], bounds[k + 1]), range(threads)))
    # deterministic reduction regardless of completion order
    return min(parts, key=lambda t: (t[0], t[1], t[2]))


def arc_two_center_points(points: Sequence[Point], threads: int = 1, exhaustive: bool = False) -> OracleResult:
    """Best contiguous two-arc split of a cyclically ordered point sequence."""
    m = len(points)
    if m < 2:
        raise ValueError("need at least two points to split")
    xs, ys = _arrays(points)
    if exhaustive:
        r, i, j = _kernels.best_split_exhaustive(xs, ys)
    else:
        r, i, j = _search(xs, ys, threads)
    i, j = int(i), int(j)
    disks = []
    for start, count in ((i, j - i), (j, m - j + i)):
        cx, cy, rad = _kernels.mec_arc(xs, ys, start, count)
        disks.append(Disk(Point(cx, cy), rad))
    gap = float(np.max(np.hypot(np.roll(xs, -1) - xs, np.roll(ys, -1) - ys)))
    return OracleResult(float(r), (i, j), m, (disks[0], disks[1]), gap)


def arc_two_center(p: ConvexPolygon, m: int = DEFAULT_M, threads: int = 1) -> OracleResult:
    if m < max(p.n, 4):
        raise ValueError(f"sample size {m} must be at least max(n, 4) = {max(p.n, 4)}")
    return arc_two_center_points(sample_boundary(p, m).points, threads=threads)


def brute_two_center(points: Sequence[Point]) -> float:
    """Exact two-center radius of a small point set over every bipartition."""
    pts = list(points)
    n = len(pts)
    if not 2 <= n <= 14:
        raise ValueError(f"brute force supports 2..14 points, got {n}")
    first, rest = pts[0], pts[1:]
    best = float("inf")
    for mask in itertools.product((False, True), repeat=n - 1):
        a = [first] + [q for q, side in zip(rest, mask) if not side]
        b = [q for q, side in zip(rest, mask) if side]
        r = min_enclosing_circle(a).radius
        if b and r < best:
            r = max(r, min_enclosing_circle(b).radius)
        best = min(best, r)
    return best


def empirical_ratio(p: ConvexPolygon, sol: CoverSolution, m: int = DEFAULT_M, oracle: OracleResult = None) -> float:
    """Solution radius over the oracle radius; an upper bound on the true ratio."""
    if oracle is None:
        oracle = arc_two_center(p, m)
    if oracle.radius <= 0:
        raise DegenerateError("oracle radius is zero")
    return sol.radius / oracle.radius
