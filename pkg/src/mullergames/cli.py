"""Command line interface: solve, check, convert, gen and bench.

Exit codes: 0 success, 1 solver/oracle mismatch, 2 parse or validation
error, 3 vertex cap exceeded, 4 oracle scale exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from .arena import bits
from .conditions import KINDS, MULLER, classify_large, game_parameter, large_threshold
from .errors import CapExceeded, GameError, OracleScaleExceeded
from .gamefile import dumps, game_to_dict, load_game
from .generate import GenSpec, random_instance
from .kernels import BACKENDS
from .oracle import ORACLE_CAP, oracle_solve
from .reductions import convert
from .solver import ALG1, ALG2, ALGORITHMS, DEFAULT_CAP, solve

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_CAP = 3
EXIT_ORACLE_SCALE = 4

CSV_HEADER = ["n", "kind", "algorithm", "seed", "pairs_enumerated", "elapsed_ms"]
BENCH_DENSITY = 0.8


def _labels(arena, mask):
    return [arena.names[v] for v in bits(mask)]


def _ms(seconds, timing):
    return round(seconds * 1000, 3) if timing else 0


def cmd_solve(args) -> int:
    arena, cond = load_game(args.file)
    res = solve(arena, cond, args.algorithm, cap=args.cap, backend=args.backend)
    report = {
        "win0": _labels(arena, res.win0),
        "win1": _labels(arena, res.win1),
        "algorithm": res.algorithm,
        "stats": {
            "pairs_enumerated": res.tables.pairs_enumerated,
            "elapsed_ms": _ms(res.elapsed, args.timing),
        },
    }
    if args.with_tables:
        report["P"] = list(res.tables.P)
        report["Q"] = list(res.tables.Q)
    if args.emit == "json":
        print(json.dumps(report))
    else:
        print("win0: " + " ".join(report["win0"]))
        print("win1: " + " ".join(report["win1"]))
        print(f"algorithm: {res.algorithm}")
        print(f"pairs_enumerated: {res.tables.pairs_enumerated}")
        print(f"elapsed_ms: {report['stats']['elapsed_ms']}")
        if args.with_tables:
            print("P: " + " ".join(map(str, report["P"])))
            print("Q: " + " ".join(map(str, report["Q"])))
    return EXIT_OK


def _three_way(arena, cond, backend=None):
    r1 = solve(arena, cond, ALG1, backend=backend)
    r2 = solve(arena, cond, ALG2, backend=backend)
    oracle = oracle_solve(arena, cond)
    regions = {"alg1": (r1.win0, r1.win1), "alg2": (r2.win0, r2.win1), "oracle": oracle}
    return len(set(regions.values())) == 1, regions


def _fuzz_instance(seed, index, max_n, kind):
    rng = np.random.default_rng(np.random.SeedSequence([seed, index]))
    n = int(rng.integers(2, max_n + 1))
    kind = kind or KINDS[index % len(KINDS)]
    density = float(rng.uniform(0.4, 0.9))
    inst_seed = int(rng.integers(0, 2**63))
    return GenSpec(seed=inst_seed, n=n, edge_density=round(density, 3), kind=kind)


def cmd_check(args) -> int:
    if args.fuzz is None:
        if args.file is None:
            raise SystemExit("check needs a game file or --fuzz COUNT")
        arena, cond = load_game(args.file)
        if arena.n > ORACLE_CAP:
            raise OracleScaleExceeded(arena.n, ORACLE_CAP)
        ok, regions = _three_way(arena, cond, args.backend)
        out = {"file": Path(args.file).name, "agree": ok}
        out.update({k: _labels(arena, w0) for k, (w0, _) in regions.items()})
        print(json.dumps(out))
        if not ok:
            Path(args.counterexample).write_text(dumps(game_to_dict(arena, cond)), encoding="utf-8")
            return EXIT_MISMATCH
        return EXIT_OK
    if args.max_n > ORACLE_CAP:
        raise OracleScaleExceeded(args.max_n, ORACLE_CAP)
    mismatches = 0
    for index in range(args.fuzz):
        spec = _fuzz_instance(args.seed, index, args.max_n, args.kind)
        arena, cond = random_instance(spec)
        ok, _ = _three_way(arena, cond, args.backend)
        if not ok:
            if not mismatches:
                Path(args.counterexample).write_text(dumps(game_to_dict(arena, cond)), encoding="utf-8")
            mismatches += 1
            print(json.dumps({"mismatch": index, "kind": spec.kind, "n": spec.n, "seed": spec.seed}))
    print(json.dumps({"instances": args.fuzz, "mismatches": mismatches}))
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_convert(args) -> int:
    arena, cond = load_game(args.file)
    out, report = convert(cond, arena.n, args.to, cap=args.cap)
    text = dumps(game_to_dict(arena, out))
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    info = report.as_dict()
    if not args.timing:
        info["elapsed_ms"] = 0
    print(json.dumps(info), file=sys.stderr)
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = GenSpec(
        seed=args.seed,
        n=args.n,
        edge_density=args.density,
        kind=args.kind,
        omega_size=args.omega_size,
        pairs=args.pairs,
        colours=args.colours,
        owner_split=args.owner_split,
    )
    text = dumps(game_to_dict(*random_instance(spec)))
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return EXIT_OK


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if lo > hi or lo < 2:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo, hi


def bench_spec(seed: int, n: int, index: int, kind: str, density: float) -> GenSpec:
    inst_seed = int(np.random.SeedSequence([seed, n, index]).generate_state(1, np.uint64)[0] >> 1)
    omega_size = 1 << (n - 1) if kind == MULLER else None
    return GenSpec(seed=inst_seed, n=n, edge_density=density, kind=kind, omega_size=omega_size)


def run_bench(n_range, per_n, seed, kind, algorithms, density=BENCH_DENSITY, backend=None, cap=DEFAULT_CAP):
    """Yield one row dict per (instance, algorithm) plus the instance's large-game flag."""
    for n in range(n_range[0], n_range[1] + 1):
        for index in range(per_n):
            spec = bench_spec(seed, n, index, kind, density)
            arena, cond = random_instance(spec)
            p = game_parameter(cond)
            large = p >= 1 and classify_large(p, n)
            for alg in algorithms:
                res = solve(arena, cond, alg, cap=cap, backend=backend)
                yield {
                    "n": n,
                    "kind": kind,
                    "algorithm": alg,
                    "seed": spec.seed,
                    "pairs_enumerated": res.tables.pairs_enumerated,
                    "elapsed": res.elapsed,
                    "parameter": p,
                    "large": large,
                }


def growth_ratios(rows) -> dict[int, float]:
    """Ratio of mean pairs_enumerated at n to the mean at n - 1."""
    by_n: dict[int, list[int]] = {}
    for row in rows:
        by_n.setdefault(row["n"], []).append(row["pairs_enumerated"])
    means = {n: float(np.mean(v)) for n, v in sorted(by_n.items())}
    return {n: means[n] / means[n - 1] for n in means if n - 1 in means and means[n - 1] > 0}


def cmd_bench(args) -> int:
    algorithms = list(ALGORITHMS) if args.algorithm == "both" else [args.algorithm]
    out = open(args.output, "w", newline="") if args.output != "-" else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        rows = []
        for row in run_bench(args.n_range, args.per_n, args.seed, args.kind, algorithms, args.density, args.backend, args.cap):
            rows.append(row)
            writer.writerow(
                [row["n"], row["kind"], row["algorithm"], row["seed"], row["pairs_enumerated"], _ms(row["elapsed"], args.timing)]
            )
    finally:
        if out is not sys.stdout:
            out.close()
    err = sys.stderr
    for alg in algorithms:
        for n, ratio in growth_ratios(r for r in rows if r["algorithm"] == alg).items():
            print(f"# growth {alg} n={n - 1}->{n}: {ratio:.4f}", file=err)
    for row in rows:
        if row["algorithm"] == algorithms[0]:
            threshold = large_threshold(row["n"])
            label = "large" if row["large"] else "small"
            print(f"# n={row['n']} seed={row['seed']} p={row['parameter']} threshold={threshold:.4f} {label}", file=err)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mullergames", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, timing=True):
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum vertex count")
        p.add_argument("--backend", choices=BACKENDS, default=None, help="kernel backend (default: env-selected)")
        if timing:
            p.add_argument("--no-timing", dest="timing", action="store_false", help="report elapsed_ms as 0")

    p = sub.add_parser("solve", help="decide a game file")
    p.add_argument("file")
    p.add_argument("--algorithm", choices=ALGORITHMS, default=ALG2)
    p.add_argument("--emit", choices=("json", "text"), default="json")
    p.add_argument("--with-tables", action="store_true")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="compare alg1, alg2 and the oracle")
    p.add_argument("file", nargs="?")
    p.add_argument("--fuzz", type=int, metavar="COUNT")
    p.add_argument("--max-n", type=int, default=ORACLE_CAP)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=KINDS)
    p.add_argument("--counterexample", default="counterexample.json")
    common(p, timing=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("convert", help="rewrite a condition as KL or Müller")
    p.add_argument("file")
    p.add_argument("--to", required=True, choices=("kl", "muller"))
    p.add_argument("-o", "--output", required=True)
    common(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("gen", help="write a seeded random game")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, default=MULLER)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--omega-size", type=int)
    p.add_argument("--pairs", type=int)
    p.add_argument("--colours", type=int)
    p.add_argument("--owner-split", type=float, default=0.5)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="measure pairs_enumerated growth")
    p.add_argument("--n-range", type=parse_range, required=True)
    p.add_argument("--per-n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=KINDS, default=MULLER)
    p.add_argument("--algorithm", choices=(*ALGORITHMS, "both"), default=ALG2)
    p.add_argument("--density", type=float, default=BENCH_DENSITY)
    p.add_argument("-o", "--output", default="-")
    common(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OracleScaleExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE_SCALE
    except (GameError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
