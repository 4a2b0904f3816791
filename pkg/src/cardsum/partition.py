"""Block-partitioned solving.

The index set is cut into disjoint blocks. Pair mode looks only for
solutions made of a k1-subset of one block and a k2-subset of another, which
misses solutions that sit inside one block or straddle three or more.
Composition mode walks every per-block count vector summing to m and merges
per-block sum tables, so it finds everything the exhaustive oracle does.
"""

from __future__ import annotations

import itertools
import time
import warnings
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import CapacityError, InvalidArgument
from .instance import ProblemInstance, in_range
from .mitm import DEFAULT_TABLE_CAP, SumTable, build_sum_table
from .oracle import Solution
from .parallel import merge_unique, run_tasks
from .report import INFEASIBLE, Counters, SolverReport

CONTIGUOUS = "contiguous"
ROUND_ROBIN = "round-robin"


class BlockSizeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class PartitionPlan:
    blocks: tuple[tuple[int, ...], ...]
    strategy: str

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_of(self) -> dict[int, int]:
        return {idx: b for b, block in enumerate(self.blocks) for idx in block}


def make_partition(n: int | ProblemInstance, n_blocks: int, strategy: str = CONTIGUOUS) -> PartitionPlan:
    if isinstance(n, ProblemInstance):
        n = n.n
    if not 1 <= n_blocks <= n:
        raise InvalidArgument(f"need 1 <= n_blocks <= n, got n_blocks={n_blocks}, n={n}")
    if strategy == CONTIGUOUS:
        blocks = [tuple(range(i * n // n_blocks, (i + 1) * n // n_blocks)) for i in range(n_blocks)]
    elif strategy == ROUND_ROBIN:
        blocks = [tuple(range(i, n, n_blocks)) for i in range(n_blocks)]
    else:
        raise InvalidArgument(f"unknown partition strategy {strategy!r}")
    return PartitionPlan(tuple(blocks), strategy)


def enumerate_compositions(m: int, plan: PartitionPlan) -> list[tuple[int, ...]]:
    """Per-block counts summing to m, each within its block size, in lexicographic order.

    >>> enumerate_compositions(2, PartitionPlan(((0, 1), (2, 3)), "contiguous"))
    [(0, 2), (1, 1), (2, 0)]
    """
    sizes = plan.sizes
    # suffix capacities prune branches that can no longer reach m
    room = [sum(sizes[i:]) for i in range(len(sizes) + 1)]
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], left: int) -> None:
        i = len(prefix)
        if i == len(sizes):
            if left == 0:
                out.append(tuple(prefix))
            return
        for c in range(0, min(sizes[i], left) + 1):
            if left - c <= room[i + 1]:
                prefix.append(c)
                extend(prefix, left - c)
                prefix.pop()

    if m <= room[0]:
        extend([], m)
    return out


def _mask_indices(mask: int) -> Solution:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _match_tables(
    left_z: Sequence[int], left_masks: Sequence[int], right: SumTable, s: int, limit: Optional[int], counters: Counters
) -> list[Solution]:
    """Unions of a ``left`` entry and a ``right`` entry whose sums add to ``s``; left must be sorted by sum."""
    found: list[Solution] = []
    for zr, mr in zip(right.z, right.masks):
        want = s - zr
        lo = bisect_left(left_z, want)
        hi = bisect_right(left_z, want, lo)
        for p in range(lo, hi):
            found.append(_mask_indices(left_masks[p] | mr))
            if limit is not None and len(found) >= limit:
                counters.add(probes=1)
                return found
        counters.add(probes=1)
    return found


def _pair_task(inst, plan, a, ca, b, cb, s, limit, cap) -> tuple[list[Solution], Counters]:
    counters = Counters()
    counters.add(tasks=1)
    if ca > len(plan.blocks[a]) or cb > len(plan.blocks[b]):
        return [], counters
    left = build_sum_table(inst.values, plan.blocks[a], ca, cap=cap)
    counters.add_table(len(left))
    right = build_sum_table(inst.values, plan.blocks[b], cb, cap=cap)
    counters.add_table(len(right))
    return _match_tables(left.z, left.masks, right, s, limit, counters), counters


def solve_pair_mode(
    inst: ProblemInstance,
    plan: PartitionPlan,
    k1: int,
    k2: int,
    limit: Optional[int] = None,
    *,
    threads: Optional[int] = 1,
    cap: int = DEFAULT_TABLE_CAP,
    counters: Optional[Counters] = None,
) -> list[Solution]:
    """Solutions split as k1 indices in one block and k2 in another, over every block pair.

    When k1 != k2 both role assignments are searched for each pair.
    """
    if k1 < 0 or k2 < 0 or k1 + k2 != inst.m:
        raise InvalidArgument(f"k1 + k2 must equal m={inst.m} (got {k1} + {k2})")
    if len(plan.blocks) < 2:
        raise InvalidArgument("pair mode needs at least two blocks")
    if min(plan.sizes) < 2 * max(k1, k2):
        warnings.warn(
            f"smallest block has {min(plan.sizes)} indices, less than 2*max(k1, k2) = {2 * max(k1, k2)}",
            BlockSizeWarning,
            stacklevel=2,
        )
    counters = Counters() if counters is None else counters
    if not in_range(inst):
        return []
    roles = [(k1, k2)] if k1 == k2 else [(k1, k2), (k2, k1)]
    tasks = [(a, ca, b, cb) for a, b in itertools.combinations(range(len(plan.blocks)), 2) for ca, cb in roles]
    results = run_tasks(
        lambda t: _pair_task(inst, plan, t[0], t[1], t[2], t[3], inst.target, limit, cap), tasks, threads
    )
    for _, c in results:
        counters.merge(c)
    return merge_unique((found for found, _ in results), limit)


def _composition_task(inst, plan, counts, s, limit, cap) -> tuple[list[Solution], Counters]:
    counters = Counters()
    counters.add(tasks=1)
    parts = [(plan.blocks[b], c) for b, c in enumerate(counts) if c]
    if not parts:
        return ([()] if s == 0 else []), counters
    tables = []
    for block, c in parts:
        table = build_sum_table(inst.values, block, c, cap=cap)
        counters.add_table(len(table))
        tables.append(table)
    if len(tables) == 1:
        only = tables[0]
        lo = bisect_left(only.z, s)
        hi = bisect_right(only.z, s, lo)
        counters.add(probes=1)
        found = [_mask_indices(only.masks[p]) for p in range(lo, hi)]
        return (found if limit is None else found[:limit]), counters
    # left-to-right products of all but the last table, then probe with the last
    acc = list(zip(tables[0].z, tables[0].masks))
    for table in tables[1:-1]:
        size = len(acc) * len(table)
        if size > cap:
            raise CapacityError(f"partial table of {size} entries exceeds cap {cap}")
        acc = [(za + zb, ma | mb) for za, ma in acc for zb, mb in zip(table.z, table.masks)]
        counters.add_table(size)
    acc.sort()
    return _match_tables([z for z, _ in acc], [mk for _, mk in acc], tables[-1], s, limit, counters), counters


def solve_composition_mode(
    inst: ProblemInstance,
    plan: PartitionPlan,
    limit: Optional[int] = None,
    *,
    threads: Optional[int] = 1,
    cap: int = DEFAULT_TABLE_CAP,
    counters: Optional[Counters] = None,
) -> list[Solution]:
    counters = Counters() if counters is None else counters
    if not in_range(inst):
        return []
    compositions = enumerate_compositions(inst.m, plan)
    results = run_tasks(
        lambda counts: _composition_task(inst, plan, counts, inst.target, limit, cap), compositions, threads
    )
    for _, c in results:
        counters.merge(c)
    return merge_unique((found for found, _ in results), limit)


def solve(
    inst: ProblemInstance,
    limit: Optional[int] = None,
    *,
    mode: str = "composition",
    n_blocks: int = 2,
    strategy: str = CONTIGUOUS,
    k1: Optional[int] = None,
    k2: Optional[int] = None,
    threads: Optional[int] = 1,
    cap: int = DEFAULT_TABLE_CAP,
) -> SolverReport:
    started = time.perf_counter()
    algorithm = f"partition-{mode}"
    if mode not in ("pair", "composition"):
        raise InvalidArgument(f"unknown partition mode {mode!r}")
    if not in_range(inst):
        return SolverReport(algorithm, [], status=INFEASIBLE, wall_time=(time.perf_counter() - started) * 1e3)
    plan = make_partition(inst.n, min(n_blocks, inst.n), strategy) if inst.n else PartitionPlan((), strategy)
    counters = Counters()
    if mode == "pair":
        if k1 is None and k2 is None:
            k1 = inst.m // 2
        k1 = inst.m - k2 if k1 is None else k1
        k2 = inst.m - k1 if k2 is None else k2
        solutions = solve_pair_mode(inst, plan, k1, k2, limit, threads=threads, cap=cap, counters=counters)
    else:
        solutions = solve_composition_mode(inst, plan, limit, threads=threads, cap=cap, counters=counters)
    return SolverReport.from_counters(algorithm, solutions, counters, (time.perf_counter() - started) * 1e3)


def block_counts(sol: Sequence[int], plan: PartitionPlan) -> tuple[int, ...]:
    """How many indices of ``sol`` fall in each block."""
    owner = plan.block_of()
    counts = [0] * len(plan.blocks)
    for i in sol:
        counts[owner[i]] += 1
    return tuple(counts)


def pair_mode_reachable(sol: Sequence[int], plan: PartitionPlan, k1: int, k2: int) -> bool:
    """True when ``sol`` has k1 indices in one block, k2 in another and none elsewhere."""
    counts = block_counts(sol, plan)
    for a, b in itertools.combinations(range(len(counts)), 2):
        rest = sum(counts) - counts[a] - counts[b]
        if rest == 0 and (counts[a], counts[b]) in ((k1, k2), (k2, k1)):
            return True
    return False
