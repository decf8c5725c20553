"""Convex polygon model: validation, boundary sampling, generators and file I/O."""
from __future__ import annotations

import heapq
import io
import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NonConvexError, NonFiniteError, ParseError, TooFewPointsError
from .geom import Point, Segment, cross, dist, signed_area

DUP_TOL = 1e-12
CROSS_TOL = 1e-12


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex vertex ring, counter-clockwise.

    Build instances through :func:`validate`; the bare constructor trusts its input.
    """

    vertices: tuple[Point, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Segment]:
        v = self.vertices
        n = len(v)
        return [Segment(v[i], v[(i + 1) % n]) for i in range(n)]

    @property
    def perimeter(self) -> float:
        return sum(e.length for e in self.edges())

    @classmethod
    def segment(cls, p: Point, q: Point) -> "ConvexPolygon":
        """Two-vertex degenerate polygon, for tests of the zero-area case."""
        p, q = Point(*p), Point(*q)
        if dist(p, q) <= DUP_TOL:
            raise TooFewPointsError("segment polygon needs two distinct endpoints")
        return cls((p, q))


@dataclass(frozen=True)
class BoundarySample:
    points: tuple[Point, ...]
    includes_vertices: bool = True
    # index into points of each polygon vertex, in ring order
    vertex_index: tuple[int, ...] = ()


def _as_points(ring: Iterable) -> list[Point]:
    out = []
    for p in ring:
        x, y = p
        out.append(Point(x, y))
    return out


def _drop_duplicates(pts: list[Point]) -> list[Point]:
    out: list[Point] = []
    for p in pts:
        if not out or dist(out[-1], p) > DUP_TOL:
            out.append(p)
    while len(out) > 1 and dist(out[0], out[-1]) <= DUP_TOL:
        out.pop()
    return out


def validate(ring: Sequence) -> ConvexPolygon:
    """Check that ``ring`` is a convex polygon and normalize it.

    Orientation is made counter-clockwise (keeping the first vertex first) and
    collinear vertices are removed.
    """
    pts = _as_points(ring)
    if len(pts) < 3:
        raise TooFewPointsError(f"a polygon needs at least 3 vertices, got {len(pts)}")
    pts = _drop_duplicates(pts)
    if len(pts) < 3:
        raise TooFewPointsError("fewer than 3 distinct vertices")
    area = signed_area(pts)
    if area == 0.0:
        raise NonConvexError("polygon has zero area")
    if area < 0:
        pts = [pts[0]] + pts[:0:-1]

    changed = True
    while changed and len(pts) >= 3:
        changed = False
        n = len(pts)
        keep = []
        for i in range(n):
            c = cross(pts[i - 1], pts[i], pts[(i + 1) % n])
            if c < -CROSS_TOL:
                raise NonConvexError(f"reflex vertex {pts[i]} (cross {c:.3g})")
            if c <= 0.0:
                changed = True
                # drop one vertex per sweep so neighbours are re-tested
                keep.extend(pts[i + 1:])
                break
            keep.append(pts[i])
        pts = keep
    if len(pts) < 3:
        raise NonConvexError("polygon collapses to a segment")

    # all left turns but winding more than once (a star) is not convex
    turning = 0.0
    n = len(pts)
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        h1 = math.atan2(b.y - a.y, b.x - a.x)
        h2 = math.atan2(c.y - b.y, c.x - b.x)
        d = h2 - h1
        while d <= -math.pi:
            d += 2 * math.pi
        while d > math.pi:
            d -= 2 * math.pi
        turning += d
    if abs(turning - 2 * math.pi) > 1e-6:
        raise NonConvexError(f"ring winds {turning / (2 * math.pi):.2f} times")
    return ConvexPolygon(tuple(pts))


def sample_boundary(p: ConvexPolygon, m: int) -> BoundarySample:
    """All vertices plus ``m - n`` extra points spread over the edges.

    Extra points go one at a time to the edge whose current spacing is
    largest, which apportions them in proportion to edge length.
    """
    n = p.n
    if m < n:
        raise ValueError(f"sample size {m} is smaller than the vertex count {n}")
    edges = p.edges()
    lengths = [e.length for e in edges]
    extra = [0] * n
    heap = [(-lengths[k], k) for k in range(n)]
    heapq.heapify(heap)
    for _ in range(m - n):
        _, k = heapq.heappop(heap)
        extra[k] += 1
        heapq.heappush(heap, (-lengths[k] / (extra[k] + 1), k))
    points = []
    vidx = []
    for k, e in enumerate(edges):
        vidx.append(len(points))
        points.append(e.p)
        c = extra[k]
        for s in range(1, c + 1):
            points.append(e.at(s / (c + 1)))
    return BoundarySample(tuple(points), True, tuple(vidx))


def gen_regular(n: int, circumradius: float = 1.0) -> ConvexPolygon:
    if n < 3:
        raise ValueError(f"regular polygon needs n >= 3, got {n}")
    if not circumradius > 0:
        raise ValueError("circumradius must be positive")
    ring = [
        (circumradius * math.cos(2 * math.pi * k / n), circumradius * math.sin(2 * math.pi * k / n))
        for k in range(n)
    ]
    return validate(ring)


def _valtr_ring(n: int, rng: np.random.Generator) -> np.ndarray:
    def chain_vectors(vals: np.ndarray) -> np.ndarray:
        inner = rng.random(n - 2) < 0.5
        up = np.concatenate(([True], inner, [True]))
        down = np.concatenate(([True], ~inner, [True]))
        fwd = np.diff(vals[up])
        back = -np.diff(vals[down])
        return np.concatenate((fwd, back))

    xs = np.sort(rng.random(n))
    ys = np.sort(rng.random(n))
    vx = chain_vectors(xs)
    vy = rng.permutation(chain_vectors(ys))
    order = np.argsort(np.arctan2(vy, vx), kind="stable")
    ring = np.cumsum(np.stack((vx[order], vy[order]), axis=1), axis=0)
    ring += np.array([xs[0], ys[0]]) - ring.min(axis=0)
    return np.clip(ring, 0.0, 1.0)


def random_convex_ring(n: int, seed: int) -> np.ndarray:
    """Raw ``(n, 2)`` Valtr ring inside the unit box, unvalidated (for benchmarks)."""
    if n < 3:
        raise ValueError(f"random polygon needs n >= 3, got {n}")
    return _valtr_ring(n, np.random.default_rng(seed))


def gen_random_convex(n: int, seed: int) -> ConvexPolygon:
    """Random convex polygon with exactly ``n`` vertices in the unit box."""
    if n < 3:
        raise ValueError(f"random polygon needs n >= 3, got {n}")
    rng = np.random.default_rng(seed)
    while True:
        ring = _valtr_ring(n, rng)
        try:
            poly = validate(ring.tolist())
        except (NonConvexError, TooFewPointsError):
            continue
        # near-parallel consecutive vectors can collapse to collinear vertices
        if poly.n == n:
            return poly


SQRT3_2 = math.sqrt(3) / 2


def gen_square_diamond(t: float) -> ConvexPolygon:
    """Diamond inscribed in the unit square with its long diagonal horizontal.

    Vertices sit on the left and right side midpoints and at ``x = xb`` on the
    top and bottom sides. ``t = 0`` is the square rotated by 45 degrees
    (``xb = 1/2``); ``|t| = 1`` puts ``xb`` where the top vertex is at distance 1
    from the far side vertex (``xb = sqrt(3)/2``, or ``1 - sqrt(3)/2`` for
    negative ``t``). The ring starts at the right vertex so that the horizontal
    diagonal is the lexicographically first diameter pair.
    """
    if not -1.0 <= t <= 1.0:
        raise ValueError("diamond parameter must lie in [-1, 1]")
    a = abs(t)
    xb = (1 - a) * 0.5 + a * SQRT3_2
    if t < 0:
        xb = 1 - xb
    return ConvexPolygon((Point(1.0, 0.5), Point(xb, 1.0), Point(0.0, 0.5), Point(xb, 0.0)))


def parse_vertices(text, fmt: str = "csv") -> list[Point]:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not UTF-8", offset=exc.start) from None
    if fmt == "csv":
        return _parse_csv(text)
    if fmt == "json":
        return _parse_json(text)
    raise ValueError(f"unknown vertex format {fmt!r}")


def _parse_csv(text: str) -> list[Point]:
    out = []
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split(",")
        if len(fields) != 2:
            raise ParseError(f"expected 'x,y', got {line!r}", line=lineno)
        try:
            x, y = float(fields[0]), float(fields[1])
        except ValueError:
            raise ParseError(f"not a number in {line!r}", line=lineno) from None
        try:
            out.append(Point(x, y))
        except NonFiniteError as exc:
            raise NonFiniteError(f"{exc} at line {lineno}") from None
    return out


def _parse_json(text: str) -> list[Point]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, offset=exc.pos) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("vertices"), list):
        raise ParseError('expected an object with a "vertices" array')
    out = []
    for k, item in enumerate(doc["vertices"]):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in item)
        ):
            raise ParseError(f"vertex {k} is not an [x, y] pair of numbers")
        out.append(Point(item[0], item[1]))
    return out


def write_vertices(points: Iterable, fmt: str = "csv") -> str:
    """Serialize vertices so that :func:`parse_vertices` recovers them bit for bit."""
    pts = [(float(x), float(y)) for x, y in points]
    if fmt == "csv":
        return "".join(f"{x!r},{y!r}\n" for x, y in pts)
    if fmt == "json":
        return json.dumps({"vertices": [[x, y] for x, y in pts]}) + "\n"
    raise ValueError(f"unknown vertex format {fmt!r}")
