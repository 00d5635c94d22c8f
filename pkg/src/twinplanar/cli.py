"""Command-line front end.

Subcommands: ``seq`` (build + verify a contraction sequence), ``verify``,
``exact``, ``prep`` (triangulate/quadrangulate), ``gen`` (seeded corpora)
and ``bench`` (TSV timing table).  Exit codes: 0 success, 1 format errors,
2 invariant violations.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import plane_graph as pg
from . import trigraph as tg
from .buildctx import BuilderError
from .generators import gen_quadrangulation, gen_triangulation
from .instrument import InvariantChecker, InvariantViolation
from .layering import left_aligned_bfs_tree
from .oracle import OracleError, exact_twinwidth
from .seq_bipartite import bipartite_sequence
from .seq_planar import planar_sequence

PRNG_ID = "python-mt19937"
DEBUG_RECHECK_DEFAULT = 64


@dataclass
class RunConfig:
    """Benchmark/corpus run parameters; the seed fully determines outputs."""

    mode: str
    sizes: list[int]
    seeds: int = 3
    assert_mode: bool = False


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_graph(path: str, embed: bool) -> pg.PlaneGraph:
    text = _read(path)
    if "p plane" in text:
        return pg.parse_plane(text)
    n, edges = pg.parse_edge_list(text)
    if not embed:
        raise pg.FormatError(
            "input is a bare edge list; pass --embed to let the tool "
            "compute a planar embedding")
    return pg.embed_abstract(n, edges)


def cmd_seq(args) -> int:
    g = _load_graph(args.graph, args.embed)
    checker = InvariantChecker(args.mode) if getattr(args, "assert_mode", False) else None
    if args.mode == "planar":
        seq, report = planar_sequence(g, checker=checker)
    else:
        seq, report = bipartite_sequence(g, checker=checker)
    if args.out:
        _write(args.out, tg.write_seq(seq))
    print(f"width {report.width}")
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.graph, args.embed)
    seq = tg.parse_seq(_read(args.seq))
    levels = None
    if args.root is not None:
        from .layering import bfs_layering
        levels = bfs_layering(g, args.root)
    recheck = args.recheck or (DEBUG_RECHECK_DEFAULT if args.debug else 0)
    report = tg.verify_sequence(g.n, g.edges, seq, levels=levels,
                                debug_recheck=recheck)
    print(f"width {report.width}")
    if not report.full:
        print("note: sequence is partial", file=sys.stderr)
    return 0


def cmd_exact(args) -> int:
    text = _read(args.graph)
    if "p plane" in text:
        g = pg.parse_plane(text)
        n, edges = g.n, g.edges
    else:
        n, edges = pg.parse_edge_list(text)
    res = exact_twinwidth(n, edges, limit=args.limit)
    if args.out:
        _write(args.out, tg.write_seq(res.witness))
    print(f"width {res.width}")
    return 0


def cmd_prep(args) -> int:
    g = _load_graph(args.graph, args.embed)
    if len(pg.connected_components(g)) > 1:
        g, _ = pg.connect_components(g)
    if args.kind == "triangulate":
        g2, vm = pg.triangulate(g)
    else:
        g2, vm = pg.quadrangulate(g)
    comments = [f"prep {args.kind}"] + [
        f"map {old} {new}" for old, new in sorted(vm.old_to_new.items())]
    _write(args.out, pg.write_plane(g2, comments))
    return 0


def cmd_gen(args) -> int:
    if args.kind == "tri":
        g = gen_triangulation(args.n, args.seed)
    else:
        grid = None
        if args.grid:
            r, c = args.grid.split("x")
            grid = (int(r), int(c))
        g = gen_quadrangulation(args.n, args.seed, grid=grid)
    comments = [f"gen {args.kind} n={args.n} seed={args.seed} prng={PRNG_ID}"]
    _write(args.out, pg.write_plane(g, comments))
    return 0


def cmd_tree(args) -> int:
    g = _load_graph(args.graph, args.embed)
    root = args.root if args.root is not None else g.tail[g.outer_dart]
    t = left_aligned_bfs_tree(g, root)
    print(" ".join(str(p) for p in t.parent))
    return 0


def cmd_bench(args) -> int:
    cfg = RunConfig(mode=args.mode, sizes=list(args.sizes), seeds=args.seeds)
    return run_bench(cfg)


def run_bench(cfg: RunConfig) -> int:
    for n in cfg.sizes:
        for seed in range(cfg.seeds):
            if cfg.mode == "planar":
                g = gen_triangulation(n, seed)
                t0 = time.perf_counter()
                _, report = planar_sequence(g)
                ms = (time.perf_counter() - t0) * 1000.0
            else:
                g = gen_quadrangulation(n, seed)
                t0 = time.perf_counter()
                _, report = bipartite_sequence(g)
                ms = (time.perf_counter() - t0) * 1000.0
            print(f"{n}\t{cfg.mode}\t{report.width}\t{ms:.1f}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="twinplanar",
        description="Twin-width contraction sequences for planar graphs "
                    "(width <= 8) and bipartite planar graphs (width <= 6).")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("seq", help="build and verify a contraction sequence")
    p.add_argument("graph")
    p.add_argument("--mode", choices=("planar", "bipartite"), required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--assert", dest="assert_mode", action="store_true",
                   help="run the per-step invariant suites while building")
    p.add_argument("--embed", action="store_true")
    p.set_defaults(fn=cmd_seq)

    p = sub.add_parser("verify", help="replay a sequence and print its width")
    p.add_argument("graph")
    p.add_argument("seq")
    p.add_argument("--root", type=int, default=None,
                   help="validate d-steps against BFS levels from this root")
    p.add_argument("--recheck", type=int, default=0, metavar="K",
                   help="recompute red degrees from scratch every K steps "
                        f"(debug; {DEBUG_RECHECK_DEFAULT} is the usual choice)")
    p.add_argument("--debug", action="store_true",
                   help=f"shorthand for --recheck {DEBUG_RECHECK_DEFAULT}")
    p.add_argument("--embed", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("exact", help="exact twin-width by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, default=10)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_exact)

    p = sub.add_parser("prep", help="complete to a triangulation/quadrangulation")
    p.add_argument("kind", choices=("triangulate", "quadrangulate"))
    p.add_argument("graph")
    p.add_argument("--out", default=None)
    p.add_argument("--embed", action="store_true")
    p.set_defaults(fn=cmd_prep)

    p = sub.add_parser("gen", help="generate a seeded corpus graph")
    p.add_argument("kind", choices=("tri", "quad"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid", default=None, help="RxC grid instead of stacking")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("tree", help="emit the left-aligned BFS parent array")
    p.add_argument("graph")
    p.add_argument("--root", type=int, default=None)
    p.add_argument("--embed", action="store_true")
    p.set_defaults(fn=cmd_tree)

    p = sub.add_parser("bench", help="width/runtime TSV over seeded corpora")
    p.add_argument("--mode", choices=("planar", "bipartite"), default="planar")
    p.add_argument("--sizes", type=int, nargs="+", required=True)
    p.add_argument("--seeds", type=int, default=3)
    p.set_defaults(fn=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (pg.FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (pg.PlaneError, tg.SequenceError, BuilderError, InvariantViolation,
            OracleError, ValueError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
