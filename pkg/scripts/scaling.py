#!/usr/bin/env python3
"""Linear-time scaling experiment: median sequence-build time when the input
size doubles.  A ratio around 2 confirms linear behaviour.

    python scripts/scaling.py --base 100000 --seeds 10
"""

import argparse
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from twinplanar import gen_triangulation  # noqa: E402
from twinplanar.seq_planar import planar_sequence_full  # noqa: E402


def median_build(n: int, seeds: int) -> float:
    times = []
    for seed in range(seeds):
        g = gen_triangulation(n, seed)
        t0 = time.perf_counter()
        planar_sequence_full(g, verify=False)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--base", type=int, default=100_000)
    ap.add_argument("--seeds", type=int, default=10)
    args = ap.parse_args()
    small = median_build(args.base, args.seeds)
    big = median_build(2 * args.base, args.seeds)
    ratio = big / small
    print(f"n={args.base}: median {small:.2f}s")
    print(f"n={2 * args.base}: median {big:.2f}s")
    print(f"ratio {ratio:.2f} (linear target ~2.0, soft cap 2.5)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
