"""Floating-point geometric primitives used by every other module.

All values are immutable. Comparisons that need slack take an explicit
``eps`` argument; the package-wide default is :data:`EPS_GEOM`.
"""
from __future__ import annotations

import math
import random
from typing import NamedTuple, Optional, Sequence

from .errors import NonFiniteError, TooFewPointsError

EPS_GEOM = 1e-9

# fixed so repeated calls on the same input give bit-identical circles
MEC_SEED = 0x5EED


class _PointBase(NamedTuple):
    x: float
    y: float


class Point(_PointBase):
    __slots__ = ()

    def __new__(cls, x, y):
        x = float(x)
        y = float(y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise NonFiniteError(f"non-finite coordinate ({x}, {y})")
        return super().__new__(cls, x, y)

    def __repr__(self):
        return f"Point({self.x!r}, {self.y!r})"


class Segment(NamedTuple):
    p: Point
    q: Point

    @property
    def length(self) -> float:
        return dist(self.p, self.q)

    def at(self, t: float) -> Point:
        return Point(self.p.x + t * (self.q.x - self.p.x), self.p.y + t * (self.q.y - self.p.y))


class Disk(NamedTuple):
    center: Point
    radius: float


class Rect(NamedTuple):
    """Oriented rectangle; the long axis makes ``frame_angle`` with the x-axis."""

    frame_angle: float
    center: Point
    length: float
    width: float

    @classmethod
    def from_extents(cls, angle: float, center: Point, along: float, across: float) -> "Rect":
        """Build a rect from its extent along ``angle`` and across it, swapping axes if needed."""
        if across > along:
            angle += math.pi / 2
            along, across = across, along
        angle = math.fmod(angle, math.pi)
        if angle < 0:
            angle += math.pi
        if angle >= math.pi:
            angle = 0.0
        return cls(angle, center, along, across)

    @property
    def axis(self) -> tuple[float, float]:
        return math.cos(self.frame_angle), math.sin(self.frame_angle)

    def corners(self) -> list[Point]:
        ux, uy = self.axis
        hl, hw = self.length / 2, self.width / 2
        cx, cy = self.center
        out = []
        for sl, sw in ((-1, -1), (1, -1), (1, 1), (-1, 1)):
            out.append(Point(cx + sl * hl * ux - sw * hw * uy, cy + sl * hl * uy + sw * hw * ux))
        return out


def dist(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def cross(o: Point, a: Point, b: Point) -> float:
    """z-component of (a - o) x (b - o); positive for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def rotate_frame(p: Point, theta: float) -> Point:
    """Coordinates of ``p`` in axes rotated counter-clockwise by ``theta``."""
    c, s = math.cos(theta), math.sin(theta)
    return Point(p[0] * c + p[1] * s, -p[0] * s + p[1] * c)


def signed_area(ring: Sequence[Point]) -> float:
    n = len(ring)
    if n < 3:
        raise TooFewPointsError(f"signed area needs at least 3 points, got {n}")
    acc = 0.0
    for i in range(n):
        x0, y0 = ring[i]
        x1, y1 = ring[(i + 1) % n]
        acc += x0 * y1 - x1 * y0
    return acc / 2


def circumdisk_of_rect(r: Rect) -> Disk:
    return Disk(r.center, 0.5 * math.hypot(r.length, r.width))


def disk_contains(d: Disk, p: Point, eps: float = EPS_GEOM) -> bool:
    return dist(d.center, p) <= d.radius + eps


def segment_disk_interval(s: Segment, d: Disk) -> Optional[tuple[float, float]]:
    """Closed parameter interval ``[t0, t1]`` of ``s`` lying in ``d``, or None.

    Tangency gives a degenerate interval ``(t, t)`` rather than None.
    """
    px, py = s.p
    dx, dy = s.q[0] - px, s.q[1] - py
    cx, cy = d.center
    r = d.radius
    seg2 = dx * dx + dy * dy
    if seg2 == 0.0:
        return (0.0, 1.0) if math.hypot(px - cx, py - cy) <= r else None
    # foot of the perpendicular from the center, then half-chord around it
    t_foot = ((cx - px) * dx + (cy - py) * dy) / seg2
    fx, fy = px + t_foot * dx - cx, py + t_foot * dy - cy
    off2 = fx * fx + fy * fy
    if off2 > r * r:
        return None
    half = math.sqrt(r * r - off2) / math.sqrt(seg2)
    lo = max(0.0, t_foot - half)
    hi = min(1.0, t_foot + half)
    if lo > hi:
        return None
    return lo, hi


def _circle2(a: Point, b: Point) -> Disk:
    c = Point((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
    return Disk(c, max(dist(c, a), dist(c, b)))


def _circle3(a: Point, b: Point, c: Point) -> Disk:
    ax, ay = a
    bx, by = b[0] - ax, b[1] - ay
    cx, cy = c[0] - ax, c[1] - ay
    det = 2 * (bx * cy - by * cx)
    scale = max(bx * bx + by * by, cx * cx + cy * cy)
    if abs(det) <= 1e-14 * scale:
        # collinear: the farthest pair spans the other point
        return max((_circle2(a, b), _circle2(a, c), _circle2(b, c)), key=lambda d: d.radius)
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / det
    uy = (bx * c2 - cx * b2) / det
    center = Point(ax + ux, ay + uy)
    return Disk(center, max(dist(center, a), dist(center, b), dist(center, c)))


def _inside(d: Disk, p: Point) -> bool:
    return dist(d.center, p) <= d.radius * (1 + 1e-12)


def min_enclosing_circle(pts: Sequence[Point], seed: int = MEC_SEED) -> Disk:
    """Smallest disk containing ``pts`` (randomized incremental, move-to-front style)."""
    if not pts:
        raise TooFewPointsError("minimum enclosing circle of an empty set")
    order = list(pts)
    random.Random(seed).shuffle(order)
    d = Disk(order[0], 0.0)
    for i in range(1, len(order)):
        p = order[i]
        if _inside(d, p):
            continue
        d = Disk(p, 0.0)
        for j in range(i):
            q = order[j]
            if _inside(d, q):
                continue
            d = _circle2(p, q)
            for k in range(j):
                if not _inside(d, order[k]):
                    d = _circle3(p, q, order[k])
    return d
