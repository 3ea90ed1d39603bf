"""Time the numba and numpy partition kernels on the same dense Müller games.

    python benchmarks/bench_backends.py --n-range 8..13 --per-n 3

Prints one CSV row per (n, backend) with the best-of-repeats wall time, and
checks that both kernels return identical tables.
"""

import argparse
import csv
import sys
import time

import numpy as np

from mullergames.cli import BENCH_DENSITY, bench_spec, parse_range
from mullergames.generate import random_instance
from mullergames.kernels import numba_available
from mullergames.solver import partition


def best_time(arena, cond, backend, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        tables = partition(arena, cond, "alg2", backend=backend)
        best = min(best, time.perf_counter() - start)
    return best, tables


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-range", type=parse_range, default=(8, 13))
    parser.add_argument("--per-n", type=int, default=3)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args(argv)

    backends = ["numpy"] + (["numba"] if numba_available() else [])
    if len(backends) == 1:
        print("numba is unavailable or disabled; timing numpy only", file=sys.stderr)
    else:
        # compile outside the timed region
        partition(*random_instance(bench_spec(0, 4, 0, "muller", BENCH_DENSITY)), backend="numba")

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "backend", "mean_ms", "speedup_vs_numpy"])
    for n in range(args.n_range[0], args.n_range[1] + 1):
        games = [random_instance(bench_spec(args.seed, n, i, "muller", BENCH_DENSITY)) for i in range(args.per_n)]
        times = {}
        tables = {}
        for backend in backends:
            runs = [best_time(arena, cond, backend, args.repeats) for arena, cond in games]
            times[backend] = float(np.mean([t for t, _ in runs]))
            tables[backend] = [(list(t.P), t.pairs_enumerated) for _, t in runs]
        if len(set(map(repr, tables.values()))) != 1:
            raise SystemExit(f"backends disagree at n={n}")
        for backend in backends:
            writer.writerow([n, backend, f"{times[backend] * 1000:.2f}", f"{times['numpy'] / times[backend]:.1f}"])


if __name__ == "__main__":
    main()
