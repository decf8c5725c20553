"""Linear-time cover from the diameter-aligned bounding box."""
from __future__ import annotations

import math

from .calipers import diameter
from .geom import Point, Rect, rotate_frame
from .polygon import ConvexPolygon
from .stream import CoverSolution


def diameter_frame(p: ConvexPolygon) -> tuple[float, float, float, float, float]:
    """Angle of the diameter and the polygon's bounding box in that rotated frame.

    Returns ``(theta, xmin, xmax, ymin, ymax)`` with ``theta`` in ``[0, pi)``.
    """
    dx, dy = diameter(p).direction
    theta = math.atan2(dy, dx) % math.pi
    if theta >= math.pi:
        theta = 0.0
    rot = [rotate_frame(v, theta) for v in p.vertices]
    xs = [q.x for q in rot]
    ys = [q.y for q in rot]
    return theta, min(xs), max(xs), min(ys), max(ys)


def batch_cover(p: ConvexPolygon) -> CoverSolution:
    theta, x0, x1, y0, y1 = diameter_frame(p)
    center = rotate_frame(Point((x0 + x1) / 2, (y0 + y1) / 2), -theta)
    # the width never exceeds the diameter, so the long axis stays on the diameter
    rect = Rect(theta, center, x1 - x0, min(y1 - y0, x1 - x0))
    return CoverSolution.from_rect(rect, "batch")
