"""Command-line interface: ``twodisc {cover,verify,ratio,gen,render,bench}``."""
from __future__ import annotations

import argparse
import json
import sys
import time

from .batch import batch_cover
from .bounds import certified_ratio, polygon_rho
from .cover_check import polygon_covered
from .errors import DegenerateError, TwoDiscError
from .geom import EPS_GEOM
from .oracle import DEFAULT_M, arc_two_center
from .polygon import (
    gen_random_convex,
    gen_regular,
    gen_square_diamond,
    parse_vertices,
    random_convex_ring,
    validate,
    write_vertices,
)
from .stream import CoverSolution, StreamState, stream_cover
from .svg import render_svg

EXIT_OK, EXIT_INPUT, EXIT_UNCOVERED = 0, 1, 2


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _format_for(path: str, fmt) -> str:
    if fmt:
        return fmt
    return "json" if path.lower().endswith(".json") else "csv"


def _load_polygon(path: str, fmt=None):
    return validate(parse_vertices(_read(path), _format_for(path, fmt)))


def _load_solution(path: str) -> CoverSolution:
    try:
        return CoverSolution.from_dict(json.loads(_read(path)))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad solution file {path}: {exc}") from None


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_cover(args) -> int:
    poly = _load_polygon(args.infile, args.format)
    sol = stream_cover(poly.vertices) if args.mode == "stream" else batch_cover(poly)
    _write(args.out, _dump(sol.to_dict()))
    return EXIT_OK


def cmd_verify(args) -> int:
    poly = _load_polygon(args.infile, args.format)
    sol = _load_solution(args.solution)
    res = polygon_covered(poly, sol, args.eps)
    witness = None if res.witness is None else [res.witness.x, res.witness.y]
    sys.stdout.write(json.dumps({"covered": res.covered, "witness": witness}) + "\n")
    return EXIT_OK if res.covered else EXIT_UNCOVERED


def _ratio_or_none(fn):
    try:
        return fn()
    except DegenerateError:
        return None


def ratio_report(poly, m: int = DEFAULT_M, threads: int = 1) -> dict:
    stream = stream_cover(poly.vertices)
    batch = batch_cover(poly)
    cert = polygon_rho(poly)
    m_eff = max(m, poly.n, 4)
    oracle = arc_two_center(poly, m_eff, threads=threads)
    r_opt = oracle.radius
    return {
        "r_stream": stream.radius,
        "r_batch": batch.radius,
        "rho": cert.rho,
        "certified_ratio_stream": _ratio_or_none(lambda: certified_ratio(stream, cert)),
        "certified_ratio_batch": _ratio_or_none(lambda: certified_ratio(batch, cert)),
        "oracle_radius": r_opt,
        "empirical_ratio_stream": stream.radius / r_opt if r_opt > 0 else None,
        "empirical_ratio_batch": batch.radius / r_opt if r_opt > 0 else None,
        "m": m_eff,
    }


def cmd_ratio(args) -> int:
    poly = _load_polygon(args.infile, args.format)
    _write("-", _dump(ratio_report(poly, args.m, args.threads)))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "regular":
        poly = gen_regular(args.n, 1.0)
    elif args.kind == "random":
        poly = gen_random_convex(args.n, args.seed)
    else:
        # --n steps across one side of the family, --seed picks the member
        if args.n < 1:
            raise ValueError("square-diamond needs --n >= 1")
        poly = gen_square_diamond((args.seed % (args.n + 1)) / args.n)
    _write("-", write_vertices(poly.vertices, "csv"))
    return EXIT_OK


def cmd_render(args) -> int:
    poly = _load_polygon(args.infile, args.format)
    sol = _load_solution(args.solution)
    _write(args.out, render_svg(poly, sol))
    return EXIT_OK


def bench(n_list, seed: int, repeats: int = 3) -> dict:
    """Best-of-``repeats`` wall time of one streaming pass per input size."""
    results = []
    for n in n_list:
        ring = [tuple(v) for v in random_convex_ring(n, seed).tolist()]
        best = float("inf")
        size = None
        for _ in range(repeats):
            t0 = time.perf_counter()
            state = StreamState()
            for p in ring:
                state.update(p)
            elapsed = time.perf_counter() - t0
            best = min(best, elapsed)
            size = len(state.to_bytes())
        results.append({"n": n, "seconds": best, "state_bytes": size})
    return {"seed": seed, "results": results}


def _n_list(text: str) -> list[int]:
    try:
        out = [int(float(tok)) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not out or min(out) < 3:
        raise argparse.ArgumentTypeError("sizes must be at least 3")
    return out


def cmd_bench(args) -> int:
    _write("-", _dump(bench(args.n_list, args.seed)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twodisc", description="Two-disk covers of convex polygons.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_input(p, required=False, default="-"):
        p.add_argument("--in", dest="infile", required=required, default=None if required else default)
        p.add_argument("--format", choices=["csv", "json"], default=None)

    p = sub.add_parser("cover", help="compute a two-disk cover")
    p.add_argument("--mode", choices=["stream", "batch"], default="stream")
    add_input(p)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="check a cover solution against a polygon")
    add_input(p, required=True)
    p.add_argument("--solution", required=True)
    p.add_argument("--eps", type=float, default=EPS_GEOM)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ratio", help="radii, lower bound and oracle ratios")
    add_input(p, required=True)
    p.add_argument("--m", type=int, default=DEFAULT_M)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("gen", help="emit a polygon as CSV")
    p.add_argument("--kind", choices=["regular", "random", "square-diamond"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="draw polygon and cover as SVG")
    add_input(p, required=True)
    p.add_argument("--solution", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="time the streaming pass")
    p.add_argument("--n-list", type=_n_list, default=_n_list("1e3,1e4,1e5"))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TwoDiscError, ValueError, OSError) as exc:
        print(f"twodisc: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
