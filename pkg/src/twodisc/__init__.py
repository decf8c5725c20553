"""Two congruent disks covering a convex polygon: streaming and batch approximations."""
from .batch import batch_cover
from .bounds import certified_ratio, extreme_subpolygon, lower_bound_rho, polygon_rho
from .calipers import diameter
from .cover_check import edge_coverage, polygon_covered
from .geom import Disk, Point, Rect, Segment
from .oracle import arc_two_center, brute_two_center, empirical_ratio
from .polygon import ConvexPolygon, gen_random_convex, gen_regular, gen_square_diamond, validate
from .stream import CoverSolution, StreamState, stream_cover, stream_finalize, stream_update

__all__ = [
    "ConvexPolygon",
    "CoverSolution",
    "Disk",
    "Point",
    "Rect",
    "Segment",
    "StreamState",
    "arc_two_center",
    "batch_cover",
    "brute_two_center",
    "certified_ratio",
    "diameter",
    "edge_coverage",
    "empirical_ratio",
    "extreme_subpolygon",
    "gen_random_convex",
    "gen_regular",
    "gen_square_diamond",
    "lower_bound_rho",
    "polygon_covered",
    "polygon_rho",
    "stream_cover",
    "stream_finalize",
    "stream_update",
    "validate",
]
