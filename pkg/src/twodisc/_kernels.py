"""Compiled inner loops for the oracle.

Points live in two float64 arrays; an arc of the cyclic sample is given by
its start index and length. The enclosing-circle routine shuffles with a
fixed-seed xorshift so equal arcs always yield bit-identical circles.
"""
import math

import numpy as np
from numba import njit

_SEED = np.uint64(0x9E3779B97F4A7C15)


@njit(cache=True, nogil=True)
def _circle2(ax, ay, bx, by):
    cx = (ax + bx) / 2
    cy = (ay + by) / 2
    return cx, cy, max(math.hypot(ax - cx, ay - cy), math.hypot(bx - cx, by - cy))


@njit(cache=True, nogil=True)
def _circle3(ax, ay, bx, by, cx, cy):
    ux, uy = bx - ax, by - ay
    vx, vy = cx - ax, cy - ay
    det = 2.0 * (ux * vy - uy * vx)
    u2 = ux * ux + uy * uy
    v2 = vx * vx + vy * vy
    if abs(det) <= 1e-14 * max(u2, v2):
        best = _circle2(ax, ay, bx, by)
        alt = _circle2(ax, ay, cx, cy)
        if alt[2] > best[2]:
            best = alt
        alt = _circle2(bx, by, cx, cy)
        if alt[2] > best[2]:
            best = alt
        return best
    ox = ax + (vy * u2 - uy * v2) / det
    oy = ay + (ux * v2 - vx * u2) / det
    r = max(math.hypot(ax - ox, ay - oy), math.hypot(bx - ox, by - oy), math.hypot(cx - ox, cy - oy))
    return ox, oy, r


@njit(cache=True, nogil=True)
def mec_arc(xs, ys, start, count):
    """Minimum enclosing circle of ``count`` cyclic points from ``start``: (cx, cy, r)."""
    m = xs.shape[0]
    idx = np.empty(count, dtype=np.int64)
    for k in range(count):
        idx[k] = (start + k) % m
    state = _SEED
    for k in range(count - 1, 0, -1):
        state ^= state << np.uint64(13)
        state ^= state >> np.uint64(7)
        state ^= state << np.uint64(17)
        s = np.int64(state % np.uint64(k + 1))
        idx[k], idx[s] = idx[s], idx[k]

    cx, cy, r = xs[idx[0]], ys[idx[0]], 0.0
    for a in range(1, count):
        pa = idx[a]
        if math.hypot(xs[pa] - cx, ys[pa] - cy) <= r * (1 + 1e-12):
            continue
        cx, cy, r = xs[pa], ys[pa], 0.0
        for b in range(a):
            pb = idx[b]
            if math.hypot(xs[pb] - cx, ys[pb] - cy) <= r * (1 + 1e-12):
                continue
            cx, cy, r = _circle2(xs[pa], ys[pa], xs[pb], ys[pb])
            for c in range(b):
                pc = idx[c]
                if math.hypot(xs[pc] - cx, ys[pc] - cy) <= r * (1 + 1e-12):
                    continue
                cx, cy, r = _circle3(xs[pa], ys[pa], xs[pb], ys[pb], xs[pc], ys[pc])
    return cx, cy, r


@njit(cache=True, nogil=True)
def _split_value(xs, ys, i, j):
    m = xs.shape[0]
    g = mec_arc(xs, ys, i, j - i)[2]
    h = mec_arc(xs, ys, j, m - j + i)[2]
    return g, h


@njit(cache=True, nogil=True)
def best_split_search(xs, ys, i_lo, i_hi):
    """Best cut pair with first cut in ``[i_lo, i_hi)``, by bisection on the second cut.

    For a fixed first cut the arc ending at the second cut only grows and the
    other arc only shrinks, so the optimum sits where their radii cross.
    Returns ``(radius, i, j)``.
    """
    m = xs.shape[0]
    best_r, best_i, best_j = np.inf, -1, -1
    for i in range(i_lo, i_hi):
        lo, hi = i + 1, m
        while lo < hi:
            mid = (lo + hi) // 2
            g, h = _split_value(xs, ys, i, mid)
            if g >= h:
                hi = mid
            else:
                lo = mid + 1
        for j in (lo - 1, lo):
            if j < i + 1 or j > m - 1:
                continue
            g, h = _split_value(xs, ys, i, j)
            r = max(g, h)
            if r < best_r or (r == best_r and (i < best_i or (i == best_i and j < best_j))):
                best_r, best_i, best_j = r, i, j
    return best_r, best_i, best_j


@njit(cache=True, nogil=True)
def best_split_exhaustive(xs, ys):
    """Same as :func:`best_split_search` over every cut pair; cubic, for checking."""
    m = xs.shape[0]
    best_r, best_i, best_j = np.inf, -1, -1
    for i in range(m - 1):
        for j in range(i + 1, m):
            g, h = _split_value(xs, ys, i, j)
            r = max(g, h)
            if r < best_r:
                best_r, best_i, best_j = r, i, j
    return best_r, best_i, best_j
