"""Command-line interface: ``cardsum {solve,generate,verify,bench}``."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import bench, partition, solvers
from .errors import CardsumError
from .generate import GeneratorSpec, render_generated
from .instance import load_instance
from .mitm import DEFAULT_TABLE_CAP
from .parallel import default_threads
from .report import CAPACITY, SolverReport
from .verify import run_verify

EXIT_FOUND, EXIT_NONE, EXIT_ERROR = 0, 1, 2


def _limit(text: str) -> Optional[int]:
    if text == "all":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'all', got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("limit must be at least 1")
    return value


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(",", " ").split()]


def render_report(report: SolverReport, target: int, zero_based: bool = False) -> str:
    shift = 0 if zero_based else 1
    lines = [" ".join(str(i + shift) for i in sol) + f" = {target}" for sol in report.solutions]
    lines += [
        f"# algorithm: {report.algorithm}",
        f"# status: {report.status}",
        f"# solutions: {len(report.solutions)}",
        f"# entries_built: {report.entries_built}",
        f"# probes: {report.probes}",
        f"# exclusions_tried: {report.exclusions_tried}",
        f"# tasks_run: {report.tasks_run}",
        f"# wall_ms: {report.wall_time:.3f}",
    ]
    return "\n".join(lines) + "\n"


def cmd_solve(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    try:
        report = solvers.run(
            args.algorithm,
            inst,
            args.limit,
            use_complement=not args.no_complement,
            partition_mode=args.partition_mode,
            partition_blocks=args.partition_blocks,
            partition_strategy=args.partition_strategy,
            k1=args.k1,
            k2=args.k2,
            threads=args.threads,
            memory_cap=args.memory_cap_entries,
        )
    except OverflowError:
        print(f"# status: {CAPACITY}", file=sys.stderr)
        raise
    sys.stdout.write(render_report(report, inst.target, args.zero_based))
    return EXIT_FOUND if report.found else EXIT_NONE


def cmd_generate(args: argparse.Namespace) -> int:
    spec = GeneratorSpec(args.n, args.m, args.low, args.high, args.seed, not args.unplanted)
    text = render_generated(spec)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    result = run_verify(args.trials, args.seed, args.n_min, args.n_max, threads=args.threads)
    for name, count in result.by_solver.items():
        print(f"{name}: {count} checks")
    if result.passed:
        print(f"PASS: {result.checks} checks over {result.trials} trials, no discrepancies")
        return 0
    print("FAIL: " + result.counterexample.describe(), end="")
    return 1


def cmd_bench(args: argparse.Namespace) -> int:
    config = bench.BenchConfig(
        points=bench.grid(args.n, args.m),
        repetitions=args.reps,
        algorithms=args.algorithms.split(","),
        seed=args.seed,
        low=args.low,
        high=args.high,
        use_complement=args.complement,
        partition_mode=args.partition_mode,
        partition_blocks=args.partition_blocks,
        threads=args.threads,
    )
    if args.output in (None, "-"):
        bench.write_csv(config, sys.stdout)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            bench.write_csv(config, fh)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cardsum", description="Exact fixed-cardinality subset-sum solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance")
    p.add_argument("--algorithm", choices=solvers.ALGORITHMS, default="mitm")
    p.add_argument("--partition-mode", choices=("pair", "composition"), default="composition")
    p.add_argument("--partition-blocks", type=int, default=2)
    p.add_argument(
        "--partition-strategy", choices=(partition.CONTIGUOUS, partition.ROUND_ROBIN), default=partition.CONTIGUOUS
    )
    p.add_argument("--k1", type=int)
    p.add_argument("--k2", type=int)
    p.add_argument("--limit", type=_limit, default=None, help="N or 'all' (default)")
    p.add_argument("--no-complement", action="store_true", help="never solve through the complement instance")
    p.add_argument("--threads", type=int, default=default_threads())
    p.add_argument("--zero-based", action="store_true", help="print 0-based indices")
    p.add_argument("--memory-cap-entries", type=int, default=DEFAULT_TABLE_CAP)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="write a seeded random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--low", type=int, default=1)
    p.add_argument("--high", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--unplanted", action="store_true", help="draw S from the feasible range instead of planting")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="cross-check every solver against the oracle")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=14)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="operation counts over an (n, m) grid as CSV")
    p.add_argument("--n", type=_int_list, default=[10, 12, 14, 16, 18, 20])
    p.add_argument("--m", type=_int_list, default=[4, 5, 6, 7, 8])
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--algorithms", default="enumerate,mitm")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--low", type=int, default=1)
    p.add_argument("--high", type=int, default=1000)
    p.add_argument("--complement", action="store_true", help="let mitm solve through the complement when 2m > n")
    p.add_argument("--partition-mode", choices=("pair", "composition"), default="composition")
    p.add_argument("--partition-blocks", type=int, default=2)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CardsumError, OSError, OverflowError, ValueError) as exc:
        print(f"cardsum: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
