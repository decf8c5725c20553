"""Single-pass, constant-space two-disk cover.

The state keeps only the four axis extremes seen so far. Finalizing turns
their bounding box into two congruent disks, each circumscribing one half of
the box cut perpendicular to its longer side.
"""
from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import EmptyStreamError, NonFiniteError
from .geom import Disk, Point, Rect, circumdisk_of_rect

# count, then (present, value, witness x, witness y) for min_x, max_x, min_y, max_y
_STATE_FORMAT = struct.Struct("<Q" + "?ddd" * 4)


@dataclass(frozen=True)
class CoverSolution:
    disks: tuple[Disk, Disk]
    radius: float
    rect: Rect
    method: str

    @classmethod
    def from_rect(cls, rect: Rect, method: str) -> "CoverSolution":
        """Cut ``rect`` across its long axis and circumscribe both halves."""
        ux, uy = rect.axis
        q = rect.length / 4
        cx, cy = rect.center
        disks = []
        for sign in (-1, 1):
            c = Point(cx + sign * q * ux, cy + sign * q * uy)
            half = Rect.from_extents(rect.frame_angle, c, rect.length / 2, rect.width)
            disks.append(circumdisk_of_rect(half))
        return cls((disks[0], disks[1]), disks[0].radius, rect, method)

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "radius": self.radius,
            "disks": [{"center": [d.center.x, d.center.y], "radius": d.radius} for d in self.disks],
            "rect": {
                "frame_angle": self.rect.frame_angle,
                "center": [self.rect.center.x, self.rect.center.y],
                "length": self.rect.length,
                "width": self.rect.width,
            },
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "CoverSolution":
        disks = tuple(Disk(Point(*d["center"]), float(d["radius"])) for d in doc["disks"])
        if len(disks) != 2:
            raise ValueError("a cover solution has exactly two disks")
        r = doc["rect"]
        rect = Rect(float(r["frame_angle"]), Point(*r["center"]), float(r["length"]), float(r["width"]))
        return cls(disks, float(doc["radius"]), rect, str(doc["method"]))


def eq1_radius(length: float, width: float) -> float:
    """Radius of the disks circumscribing the two halves of a length x width box."""
    return math.sqrt(length * length + 4 * width * width) / 4


class StreamState:
    """Running axis extremes and their witness points.

    Memory use does not depend on how many points have been fed.
    """

    __slots__ = ("count", "min_x", "max_x", "min_y", "max_y")

    def __init__(self):
        self.count = 0
        # each extreme is (value, witness) or None
        self.min_x: Optional[tuple[float, Point]] = None
        self.max_x: Optional[tuple[float, Point]] = None
        self.min_y: Optional[tuple[float, Point]] = None
        self.max_y: Optional[tuple[float, Point]] = None

    def update(self, p) -> "StreamState":
        x, y = p
        if not (math.isfinite(x) and math.isfinite(y)):
            raise NonFiniteError(f"non-finite stream point ({x}, {y})")
        if self.count == 0:
            p = Point(x, y)
            self.min_x = self.max_x = (x, p)
            self.min_y = self.max_y = (y, p)
        else:
            # strict comparisons: ties keep the first witness
            if x < self.min_x[0]:
                self.min_x = (x, Point(x, y))
            elif x > self.max_x[0]:
                self.max_x = (x, Point(x, y))
            if y < self.min_y[0]:
                self.min_y = (y, Point(x, y))
            elif y > self.max_y[0]:
                self.max_y = (y, Point(x, y))
        self.count += 1
        return self

    def merge(self, other: "StreamState") -> "StreamState":
        """Combine states built over disjoint parts of the input; ``self`` wins ties."""
        out = StreamState()
        out.count = self.count + other.count
        for name, better in (
            ("min_x", lambda a, b: b < a),
            ("max_x", lambda a, b: b > a),
            ("min_y", lambda a, b: b < a),
            ("max_y", lambda a, b: b > a),
        ):
            mine, theirs = getattr(self, name), getattr(other, name)
            if mine is None or (theirs is not None and better(mine[0], theirs[0])):
                setattr(out, name, theirs)
            else:
                setattr(out, name, mine)
        return out

    def extremes(self) -> dict:
        return {k: getattr(self, k) for k in ("min_x", "max_x", "min_y", "max_y")}

    def to_bytes(self) -> bytes:
        fields = [self.count]
        for name in ("min_x", "max_x", "min_y", "max_y"):
            e = getattr(self, name)
            if e is None:
                fields += [False, 0.0, 0.0, 0.0]
            else:
                fields += [True, e[0], e[1].x, e[1].y]
        return _STATE_FORMAT.pack(*fields)

    @classmethod
    def from_bytes(cls, blob: bytes) -> "StreamState":
        vals = _STATE_FORMAT.unpack(blob)
        st = cls()
        st.count = vals[0]
        for k, name in enumerate(("min_x", "max_x", "min_y", "max_y")):
            present, v, wx, wy = vals[1 + 4 * k: 5 + 4 * k]
            setattr(st, name, (v, Point(wx, wy)) if present else None)
        return st

    def __eq__(self, other):
        return isinstance(other, StreamState) and self.to_bytes() == other.to_bytes()

    def __repr__(self):
        return f"StreamState(count={self.count}, {self.extremes()})"


def stream_update(state: StreamState, p) -> StreamState:
    return state.update(p)


def stream_finalize(state: StreamState) -> CoverSolution:
    if state.count == 0:
        raise EmptyStreamError("no points were streamed")
    x0, x1 = state.min_x[0], state.max_x[0]
    y0, y1 = state.min_y[0], state.max_y[0]
    center = Point((x0 + x1) / 2, (y0 + y1) / 2)
    # a square keeps the vertical cut
    rect = Rect.from_extents(0.0, center, x1 - x0, y1 - y0)
    return CoverSolution.from_rect(rect, "stream")


def stream_cover(points: Iterable) -> CoverSolution:
    state = StreamState()
    for p in points:
        state.update(p)
    return stream_finalize(state)
