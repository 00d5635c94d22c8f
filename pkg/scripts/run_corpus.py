#!/usr/bin/env python3
"""Build and verify contraction sequences over seeded corpora.

Prints one line per graph (name, n, width, build ms) and a summary with the
worst width seen.  Use --assert to run the per-step invariant suites too.

    python scripts/run_corpus.py --mode planar --sizes 10 100 1000 --seeds 5
    python scripts/run_corpus.py --mode bipartite --sizes 500 --seeds 3 --assert
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from twinplanar import gen_quadrangulation, gen_triangulation  # noqa: E402
from twinplanar.instrument import InvariantChecker  # noqa: E402
from twinplanar.seq_bipartite import bipartite_sequence_full  # noqa: E402
from twinplanar.seq_planar import planar_sequence_full  # noqa: E402
from twinplanar.trigraph import verify_sequence  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--mode", choices=("planar", "bipartite"), default="planar")
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 100, 1000])
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--assert", dest="assert_mode", action="store_true")
    args = ap.parse_args()

    cap = 8 if args.mode == "planar" else 6
    worst = 0
    for n in args.sizes:
        for seed in range(args.seeds):
            if args.mode == "planar":
                g = gen_triangulation(n, seed)
                build = planar_sequence_full
            else:
                g = gen_quadrangulation(n, seed)
                build = bipartite_sequence_full
            checker = InvariantChecker(args.mode) if args.assert_mode else None
            t0 = time.perf_counter()
            seq, _, _ = build(g, checker=checker, verify=False)
            ms = (time.perf_counter() - t0) * 1000
            rep = verify_sequence(g.n, g.edges, seq)
            worst = max(worst, rep.width)
            status = "ok" if rep.width <= cap else "VIOLATION"
            print(f"{args.mode}-n{n}-s{seed}\t{g.n}\t{rep.width}\t{ms:.1f}\t{status}")
            if rep.width > cap:
                return 1
    print(f"# worst width {worst} (bound {cap})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
