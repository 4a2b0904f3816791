"""One entry point per algorithm tag, each returning a :class:`SolverReport`."""

from __future__ import annotations

import time
from typing import Optional

from . import mitm, partition
from .instance import ProblemInstance, in_range
from .oracle import DEFAULT_ENUMERATION_CAP, enumerate_with_count
from .report import FOUND, INFEASIBLE, NONE, SolverReport

ALGORITHMS = ("enumerate", "mitm", "partition")


def run_enumerate(
    inst: ProblemInstance,
    limit: Optional[int] = None,
    *,
    threads: Optional[int] = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> SolverReport:
    started = time.perf_counter()
    if not in_range(inst):
        return SolverReport("enumerate", [], status=INFEASIBLE, wall_time=(time.perf_counter() - started) * 1e3)
    solutions, examined = enumerate_with_count(inst, limit, threads=threads, cap=cap)
    return SolverReport(
        "enumerate",
        solutions,
        probes=examined,
        tasks_run=1,
        wall_time=(time.perf_counter() - started) * 1e3,
        status=FOUND if solutions else NONE,
    )


def run(
    algorithm: str,
    inst: ProblemInstance,
    limit: Optional[int] = None,
    *,
    use_complement: bool = True,
    partition_mode: str = "composition",
    partition_blocks: int = 2,
    partition_strategy: str = partition.CONTIGUOUS,
    k1: Optional[int] = None,
    k2: Optional[int] = None,
    threads: Optional[int] = 1,
    memory_cap: int = mitm.DEFAULT_TABLE_CAP,
) -> SolverReport:
    if algorithm == "enumerate":
        return run_enumerate(inst, limit, threads=threads)
    if algorithm == "mitm":
        return mitm.solve(inst, limit, use_complement, threads=threads, cap=memory_cap)
    if algorithm == "partition":
        return partition.solve(
            inst,
            limit,
            mode=partition_mode,
            n_blocks=partition_blocks,
            strategy=partition_strategy,
            k1=k1,
            k2=k2,
            threads=threads,
            cap=memory_cap,
        )
    raise ValueError(f"unknown algorithm {algorithm!r}")
