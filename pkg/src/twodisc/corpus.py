"""Seeded mixed test corpus of convex polygons."""
from __future__ import annotations

import math
from typing import Iterator, NamedTuple

import numpy as np

from .geom import rotate_frame
from .polygon import ConvexPolygon, gen_random_convex, gen_regular, gen_square_diamond, validate


class CorpusItem(NamedTuple):
    name: str
    polygon: ConvexPolygon


def _log_uniform_n(rng: np.random.Generator, lo: int = 3, hi: int = 512) -> int:
    return int(round(math.exp(rng.uniform(math.log(lo), math.log(hi)))))


def _rotated(p: ConvexPolygon, theta: float) -> ConvexPolygon:
    return validate([rotate_frame(v, theta) for v in p.vertices])


def corpus(count: int = 1000, seed: int = 2024) -> Iterator[CorpusItem]:
    """Regular, random and square-diamond polygons with ``n`` in ``[3, 512]``.

    Random polygons are sometimes stretched along a random direction so thin
    shapes appear; regular and diamond polygons get a random rotation half of
    the time, since the streaming cover depends on orientation.
    """
    rng = np.random.default_rng(seed)
    # the bounds of the vertex range always appear
    fixed = [("regular", 3), ("regular", 512), ("random", 3), ("random", 512)]
    for k in range(count):
        if k < len(fixed):
            kind, n = fixed[k]
        else:
            kind = rng.choice(["regular", "random", "random", "diamond"])
            n = _log_uniform_n(rng)
        theta = float(rng.uniform(0, math.pi)) if rng.random() < 0.5 else 0.0
        if kind == "regular":
            poly = gen_regular(n, float(rng.uniform(0.5, 2.0)))
            name = f"regular-{n}"
        elif kind == "random":
            poly = gen_random_convex(n, int(rng.integers(2**31)))
            stretch = float(rng.choice([1.0, 1.0, rng.uniform(1.0, 8.0)]))
            if stretch != 1.0:
                poly = validate([(v.x * stretch, v.y) for v in poly.vertices])
            name = f"random-{n}"
        else:
            t = float(rng.uniform(-1.0, 1.0))
            poly = gen_square_diamond(t)
            name = f"diamond-{t:.4f}"
        if theta:
            poly = _rotated(poly, theta)
            name += f"-rot{theta:.3f}"
        yield CorpusItem(name, poly)
