"""Exit criteria: one test per criterion, each printing a PASS/FAIL line."""
import math
import random
import time

import pytest

from twodisc.batch import batch_cover
from twodisc.bounds import certified_ratio, polygon_rho
from twodisc.calipers import brute_diameter, diameter
from twodisc.cli import bench
from twodisc.corpus import corpus
from twodisc.cover_check import polygon_covered
from twodisc.geom import Point, Rect
from twodisc.oracle import arc_two_center, arc_two_center_points, brute_two_center
from twodisc.polygon import ConvexPolygon, gen_random_convex, gen_square_diamond, validate
from twodisc.stream import CoverSolution, StreamState, stream_cover

CORPUS_SIZE = 1000
M = 256
SAMPLING_TOL = 0.03
EPS = 1e-9


@pytest.fixture(scope="module")
def corpus_results():
    rows = []
    t0 = time.perf_counter()
    for item in corpus(CORPUS_SIZE):
        p = item.polygon
        stream = stream_cover(p.vertices)
        batch = batch_cover(p)
        # the sample must contain every vertex
        oracle = arc_two_center(p, max(M, p.n))
        rows.append((item, stream, batch, oracle))
    return rows, time.perf_counter() - t0


def test_criterion_1_streaming_ratio(corpus_results, acceptance_report):
    rows, elapsed = corpus_results
    ratios = [(s.radius / o.radius, it.name) for it, s, b, o in rows]
    worst = max(ratios)
    ns = [it.polygon.n for it, *_ in rows]
    ok = len(rows) == CORPUS_SIZE and worst[0] <= 2.0 + SAMPLING_TOL and elapsed < 300
    acceptance_report(
        "1 streaming ratio <= 2 + 0.03",
        ok,
        f"{len(rows)} polygons, n in [{min(ns)}, {max(ns)}], worst {worst[0]:.4f} ({worst[1]}), "
        f"corpus time {elapsed:.1f}s",
    )
    assert min(ns) == 3 and max(ns) == 512
    assert worst[0] <= 2.0 + SAMPLING_TOL
    assert elapsed < 300


def test_criterion_2_batch_ratio(corpus_results, acceptance_report):
    rows, _ = corpus_results
    worst = max((b.radius / o.radius, it.name) for it, s, b, o in rows)
    ok = worst[0] <= 1.84 + SAMPLING_TOL
    acceptance_report("2 batch ratio <= 1.84 + 0.03", ok, f"worst {worst[0]:.4f} ({worst[1]})")
    assert ok


def test_criterion_3_square_diamond(acceptance_report):
    p = gen_square_diamond(1.0)
    sol = batch_cover(p)
    cert = polygon_rho(p)
    ratio = certified_ratio(sol, cert)
    ok = (
        abs(sol.radius - 0.5590169944) <= 1e-9
        and abs(cert.rho - 0.5) <= 1e-12
        and abs(ratio - 1.118) <= 1e-3
        and (sol.rect.length, sol.rect.width) == (1.0, 1.0)
    )
    acceptance_report(
        "3 square case D = W = 1",
        ok,
        f"batch radius {sol.radius:.10f}, rho {cert.rho:.10f}, certified ratio {ratio:.6f}",
    )
    assert ok


def test_criterion_4_closed_form_radius(acceptance_report):
    rng = random.Random(1234)
    worst = 0.0
    for _ in range(1000):
        length = rng.uniform(1e-3, 1e3)
        width = rng.uniform(0, length)
        rect = Rect(rng.uniform(0, math.pi), Point(rng.uniform(-10, 10), rng.uniform(-10, 10)), length, width)
        sol = CoverSolution.from_rect(rect, "stream")
        closed = math.sqrt(length**2 + 4 * width**2) / 4
        for d in sol.disks:
            worst = max(worst, abs(d.radius - closed) / closed)
    ok = worst <= 1e-12
    acceptance_report("4 half-box circumradius = sqrt(L^2 + 4W^2)/4", ok, f"max rel error {worst:.2e}")
    assert ok


def test_criterion_5_coverage(corpus_results, acceptance_report):
    rows, _ = corpus_results
    failures = [
        (it.name, kind)
        for it, s, b, o in rows
        for kind, sol in (("stream", s), ("batch", b))
        if not polygon_covered(it.polygon, sol, EPS).covered
    ]
    acceptance_report("5 coverage, eps = 1e-9", not failures, f"{2 * len(rows)} checks, failures {failures[:3]}")
    assert not failures


def test_criterion_6_diameter_matches_brute_force(acceptance_report):
    rng = random.Random(66)
    polys = [gen_random_convex(rng.randint(3, 200), seed) for seed in range(500)]
    t0 = time.perf_counter()
    mismatches = 0
    for p in polys:
        fast, slow = diameter(p), brute_diameter(p)
        if fast.length != slow.length or (fast.i, fast.j) != (slow.i, slow.j):
            mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 10
    acceptance_report("6 calipers == brute force", ok, f"500 polygons, {mismatches} mismatches, {elapsed:.2f}s")
    assert ok


def test_criterion_7_space_and_time(acceptance_report):
    rng = random.Random(7)
    s = StreamState()
    for _ in range(10):
        s.update((rng.random(), rng.random()))
    small = s.to_bytes()
    for _ in range(10**6 - 10):
        s.update((rng.random(), rng.random()))
    big = s.to_bytes()
    same_size = len(small) == len(big)

    res = bench([100_000, 200_000, 400_000], seed=3, repeats=5)["results"]
    factors = [res[k + 1]["seconds"] / res[k]["seconds"] for k in range(len(res) - 1)]
    linear = all(1.4 <= f <= 2.8 for f in factors)
    sizes = {r["state_bytes"] for r in res}
    ok = same_size and linear and len(sizes) == 1
    acceptance_report(
        "7 O(1) state, linear time",
        ok,
        f"state {len(small)} B after 10 and {len(big)} B after 1e6 updates; doubling factors "
        + ", ".join(f"{f:.2f}" for f in factors),
    )
    assert same_size and len(sizes) == 1
    assert linear


def test_criterion_8_oracle_validity(acceptance_report):
    rng = random.Random(88)
    worst = 0.0
    for seed in range(200):
        pts = list(gen_random_convex(rng.randint(3, 12), 10_000 + seed).vertices)
        worst = max(worst, abs(arc_two_center_points(pts).radius - brute_two_center(pts)))
    contiguous = worst <= 1e-9

    known = {
        "unit square": (validate([(0, 0), (1, 0), (1, 1), (0, 1)]), math.sqrt(1.25) / 2),
        "equilateral triangle": (validate([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)]), 0.5),
        "segment": (ConvexPolygon.segment((0, 0), (2, 0)), 0.5),
    }
    details = []
    sandwich = True
    for name, (p, r_opt) in known.items():
        rho = polygon_rho(p).rho
        o = arc_two_center(p, M).radius
        good = rho <= o + EPS and o <= r_opt + EPS and o >= (1 - SAMPLING_TOL) * r_opt
        sandwich &= good
        details.append(f"{name} {rho:.6f} <= {o:.10f} <= {r_opt:.10f}")
    ok = contiguous and sandwich
    acceptance_report(
        "8 oracle validity",
        ok,
        f"contiguous vs brute max diff {worst:.1e} over 200; " + "; ".join(details),
    )
    assert contiguous
    assert sandwich
