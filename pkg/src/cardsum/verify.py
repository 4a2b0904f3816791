"""Randomised cross-checking of every solver against the exhaustive oracle."""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from . import mitm, partition
from .errors import InvalidArgument
from .generate import draw_target
from .instance import ProblemInstance, render_instance
from .oracle import enumerate_solutions

MAX_VERIFY_N = 20
VALUE_RANGES = ((-50, 50), (1, 100))


@dataclass
class Counterexample:
    solver: str
    instance: ProblemInstance
    expected: list[tuple[int, ...]]
    actual: list[tuple[int, ...]]

    def describe(self) -> str:
        missing = sorted(set(self.expected) - set(self.actual))
        extra = sorted(set(self.actual) - set(self.expected))
        fmt = lambda sols: ", ".join("{" + " ".join(str(i + 1) for i in s) + "}" for s in sols) or "-"
        return (
            f"solver {self.solver} disagrees with the oracle on\n"
            f"{render_instance(self.instance)}"
            f"missing: {fmt(missing)}\n"
            f"extra:   {fmt(extra)}\n"
        )


@dataclass
class VerifyResult:
    trials: int = 0
    checks: int = 0
    by_solver: dict[str, int] = field(default_factory=dict)
    counterexample: Optional[Counterexample] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def _solvers(threads: Optional[int]) -> list[tuple[str, Callable[[ProblemInstance], list], Callable]]:
    """(name, solver, expected-filter) triples; the filter maps oracle output to what the solver must return."""
    ident = lambda inst, sols: sols

    def raw_mitm(inst):
        fn = mitm.solve_even if inst.m % 2 == 0 else mitm.solve_odd
        return fn(inst, threads=threads)

    def pair_plan(inst):
        return partition.make_partition(inst.n, 2, partition.CONTIGUOUS)

    def pair(inst):
        k1 = inst.m // 2
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", partition.BlockSizeWarning)
            return partition.solve_pair_mode(inst, pair_plan(inst), k1, inst.m - k1, threads=threads)

    def pair_expected(inst, sols):
        k1 = inst.m // 2
        plan = pair_plan(inst)
        return [s for s in sols if partition.pair_mode_reachable(s, plan, k1, inst.m - k1)]

    def composition(n_blocks, strategy):
        def run(inst):
            plan = partition.make_partition(inst.n, min(n_blocks, inst.n), strategy)
            return partition.solve_composition_mode(inst, plan, threads=threads)

        return run

    return [
        ("mitm", raw_mitm, ident),
        ("mitm+complement", lambda inst: mitm.solve(inst, threads=threads).solutions, ident),
        ("partition-composition/2", composition(2, partition.CONTIGUOUS), ident),
        ("partition-composition/3rr", composition(3, partition.ROUND_ROBIN), ident),
        ("partition-pair/2", pair, pair_expected),
    ]


def trial_instances(trials: int, seed: int, n_min: int = 4, n_max: int = 14) -> Iterator[ProblemInstance]:
    """For each trial draw one value list, then one instance per m in [0, n].

    Value ranges and planted/unplanted targets alternate so both kinds are
    covered in equal measure.
    """
    rng = random.Random(seed)
    for t in range(trials):
        n = rng.randint(n_min, n_max)
        low, high = VALUE_RANGES[t % len(VALUE_RANGES)]
        values = tuple(rng.randint(low, high) for _ in range(n))
        for m in range(n + 1):
            yield draw_target(values, m, planted=(t + m) % 2 == 0, rng=rng)


def run_verify(
    trials: int = 1000,
    seed: int = 0,
    n_min: int = 4,
    n_max: int = 14,
    threads: Optional[int] = 1,
    solvers: Optional[Sequence[str]] = None,
) -> VerifyResult:
    if n_max > MAX_VERIFY_N:
        raise InvalidArgument(f"n_max={n_max} is above the oracle guard of {MAX_VERIFY_N}")
    if not 0 <= n_min <= n_max:
        raise InvalidArgument(f"bad n range [{n_min}, {n_max}]")
    selected = [s for s in _solvers(threads) if solvers is None or s[0] in solvers]
    result = VerifyResult(trials=trials, by_solver={name: 0 for name, _, _ in selected})
    for inst in trial_instances(trials, seed, n_min, n_max):
        truth = enumerate_solutions(inst)
        for name, solve, expected_of in selected:
            expected = sorted(expected_of(inst, truth))
            actual = sorted(solve(inst))
            result.checks += 1
            result.by_solver[name] += 1
            if actual != expected:
                result.counterexample = Counterexample(name, inst, expected, actual)
                return result
    return result
