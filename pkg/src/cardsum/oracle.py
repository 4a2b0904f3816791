"""Exhaustive reference solver.

Every m-combination of indices is tried in lexicographic order. This is the
ground truth the other solvers are checked against, so it stays as plain as
possible: no tables, no pairing, only a range check up front.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .combinatorics import binomial, iter_indices, rank_ranges
from .errors import CapacityError, InvalidArgument
from .instance import ProblemInstance, feasible_range
from .parallel import chunk_count, merge_unique, run_tasks

#: A solution is a strictly increasing tuple of 0-based indices.
Solution = tuple[int, ...]

DEFAULT_ENUMERATION_CAP = 1 << 31


def check_solution(inst: ProblemInstance, sol: Sequence[int]) -> None:
    """Raise ``InvalidArgument`` unless ``sol`` is a valid answer for ``inst``."""
    if len(sol) != inst.m:
        raise InvalidArgument(f"{tuple(sol)} has {len(sol)} indices, expected {inst.m}")
    if any(b <= a for a, b in zip(sol, sol[1:])) or (sol and not 0 <= sol[0] <= sol[-1] < inst.n):
        raise InvalidArgument(f"{tuple(sol)} is not a strictly increasing index tuple over n={inst.n}")
    total = sum(inst.values[i] for i in sol)
    if total != inst.target:
        raise InvalidArgument(f"{tuple(sol)} sums to {total}, expected {inst.target}")


def _scan(inst: ProblemInstance, lo: int, hi: int, limit: Optional[int]) -> tuple[list[Solution], int]:
    values, target = inst.values, inst.target
    found: list[Solution] = []
    examined = 0
    for combo in iter_indices(inst.n, inst.m, lo, hi):
        examined += 1
        if sum([values[i] for i in combo]) == target:
            found.append(combo)
            if limit is not None and len(found) >= limit:
                break
    return found, examined


def enumerate_with_count(
    inst: ProblemInstance,
    limit: Optional[int] = None,
    *,
    prune: bool = True,
    threads: Optional[int] = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> tuple[list[Solution], int]:
    """Solutions plus the number of combinations examined (0 when pruned by range)."""
    if prune and inst.target not in feasible_range(inst):
        return [], 0
    if inst.m > inst.n:
        return [], 0
    total = binomial(inst.n, inst.m)
    if total > cap:
        raise CapacityError(f"C({inst.n},{inst.m}) = {total} exceeds enumeration cap {cap}")
    if limit is not None and limit <= 0:
        return [], 0
    ranges = rank_ranges(total, chunk_count(total, threads))
    chunks = run_tasks(lambda r: _scan(inst, r[0], r[1], limit), ranges, threads)
    return merge_unique((c[0] for c in chunks), limit), sum(c[1] for c in chunks)


def enumerate_solutions(inst: ProblemInstance, limit: Optional[int] = None, **kwargs) -> list[Solution]:
    """All m-subsets summing to S, or the first ``limit`` of them in lexicographic order.

    >>> enumerate_solutions(ProblemInstance((1, 2, 3, 4), 5, 2))
    [(0, 3), (1, 2)]
    """
    return enumerate_with_count(inst, limit, **kwargs)[0]


def count_solutions(inst: ProblemInstance, **kwargs) -> int:
    return len(enumerate_solutions(inst, None, **kwargs))
