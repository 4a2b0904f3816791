"""Half-size sum tables and complement matching.

For even m the solver tabulates every k-sum (k = m/2) over the index
universe, sorts the table by sum and looks up ``S - z`` for each entry. Two
entries whose sums add up to S and whose index sets are disjoint give an
m-subset. Odd m removes one index at a time, retargets to ``S - x`` and
solves the even problem of size m - 1 on the rest.

``tau(S, z) = (S - z) * z`` is the quadratic whose collisions the pairing
is usually phrased in. ``tau`` agrees for two sums exactly when they are
equal or complementary, so matching on it directly would also pair up equal
sums; the solver matches complements instead and keeps ``tau`` for checks.
"""

from __future__ import annotations

import itertools
import time
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .arith import checked, checked_mul
from .combinatorics import binomial, rank_ranges, unrank_indices
from .errors import CapacityError, InvalidArgument
from .instance import ProblemInstance, complement_indices, complement_transform, in_range
from .oracle import Solution
from .parallel import chunk_count, merge_unique, run_tasks
from .report import INFEASIBLE, Counters, SolverReport

DEFAULT_TABLE_CAP = 1 << 27


def tau(s: int, z: int) -> int:
    """``(s - z) * z``, checked against the accumulator width.

    >>> tau(137, 42), tau(137, 95)
    (3990, 3990)
    """
    return checked_mul(checked(s - z), z)


@dataclass
class SumTable:
    """All k-sums over ``universe``, sorted by (sum, rank).

    ``ranks`` are lexicographic ranks among the k-combinations of positions
    in ``universe``; ``masks`` hold the same index sets as bitmasks over the
    original indices for fast disjointness checks.
    """

    z: list[int]
    ranks: list[int]
    masks: list[int]
    combos: list[tuple[int, ...]]
    universe: tuple[int, ...]
    k: int

    def __len__(self) -> int:
        return len(self.z)

    @property
    def entries(self) -> list[tuple[int, int]]:
        return list(zip(self.z, self.ranks))

    def position(self, rank: int) -> int:
        # linear, only used by tests and reporting
        return self.ranks.index(rank)

    def decode(self, rank: int) -> tuple[int, ...]:
        """Original indices of the combination with the given rank."""
        return tuple(self.universe[p] for p in unrank_indices(len(self.universe), self.k, rank))


@dataclass(frozen=True)
class CollisionPair:
    rank_a: int
    rank_b: int
    z_a: int
    z_b: int


def _build_slice(values: Sequence[int], universe: tuple[int, ...], k: int, lo: int, hi: int):
    # combinations of an ascending universe come out in the same order as those of its positions
    get_value = values.__getitem__
    get_bit = {i: 1 << i for i in universe}.__getitem__
    combos = list(itertools.islice(itertools.combinations(universe, k), lo, hi))
    sums = [sum(map(get_value, c)) for c in combos]
    if sums:
        checked(min(sums), "k-sum")
        checked(max(sums), "k-sum")
    masks = [sum(map(get_bit, c)) for c in combos]
    return list(zip(sums, range(lo, hi), masks, combos))


def build_sum_table(
    values: Sequence[int],
    universe: Optional[Sequence[int]] = None,
    k: int = 0,
    *,
    threads: Optional[int] = 1,
    cap: int = DEFAULT_TABLE_CAP,
) -> SumTable:
    universe = tuple(range(len(values))) if universe is None else tuple(universe)
    if any(b <= a for a, b in zip(universe, universe[1:])):
        raise InvalidArgument("universe must be strictly increasing")
    if not 0 <= k <= len(universe):
        raise InvalidArgument(f"k={k} outside [0, {len(universe)}]")
    size = binomial(len(universe), k)
    if size > cap:
        raise CapacityError(f"sum table of C({len(universe)},{k}) = {size} entries exceeds cap {cap}")
    slices = run_tasks(
        lambda r: _build_slice(values, universe, k, r[0], r[1]),
        rank_ranges(size, chunk_count(size, threads)),
        threads,
    )
    rows = [row for part in slices for row in part]
    rows.sort()  # ranks are unique, so (sum, rank) decides
    return SumTable(
        z=[r[0] for r in rows],
        ranks=[r[1] for r in rows],
        masks=[r[2] for r in rows],
        combos=[r[3] for r in rows],
        universe=universe,
        k=k,
    )


def _matches(table: SumTable, s: int, lo: int, hi: int, counters: Optional[Counters]) -> Iterator[tuple[int, int]]:
    """Position pairs (p, q) with z[p] + z[q] == s and disjoint index sets, for p in [lo, hi).

    Each unordered pair is produced once: by the entry with the smaller sum,
    or by the earlier position when both sums equal s/2.
    """
    z, masks = table.z, table.masks
    lookups = 0
    try:
        for p in range(lo, hi):
            zp = z[p]
            want = s - zp
            if want < zp:
                continue
            lookups += 1
            if want == zp:
                start, stop = p + 1, bisect_right(z, want, p + 1)
            else:
                start = bisect_left(z, want, p + 1)
                stop = bisect_right(z, want, start)
            mp = masks[p]
            for q in range(start, stop):
                if not mp & masks[q]:
                    yield p, q
    finally:
        if counters is not None:
            counters.add(probes=lookups)


def _pair(table: SumTable, p: int, q: int) -> CollisionPair:
    a, b = (p, q) if table.ranks[p] < table.ranks[q] else (q, p)
    return CollisionPair(table.ranks[a], table.ranks[b], table.z[a], table.z[b])


def find_pairs(
    table: SumTable,
    s: int,
    limit: Optional[int] = None,
    *,
    counters: Optional[Counters] = None,
) -> list[CollisionPair]:
    """Every unordered pair of distinct, index-disjoint entries whose sums add to ``s``.

    Pairs are sorted by ``(rank_a, rank_b)``; with ``limit`` the first
    ``limit`` pairs in table scan order are kept.
    """
    pairs = []
    for p, q in _matches(table, s, 0, len(table), counters):
        pairs.append(_pair(table, p, q))
        if limit is not None and len(pairs) >= limit:
            break
    return sorted(pairs, key=lambda c: (c.rank_a, c.rank_b))


def _union(table: SumTable, p: int, q: int) -> Solution:
    return tuple(sorted(table.combos[p] + table.combos[q]))


def _even_core(
    values: Sequence[int],
    universe: tuple[int, ...],
    m: int,
    s: int,
    limit: Optional[int],
    threads: Optional[int],
    cap: int,
    counters: Counters,
    collisions: Optional[list[CollisionPair]] = None,
) -> list[Solution]:
    k = m // 2
    table = build_sum_table(values, universe, k, threads=threads, cap=cap)
    counters.add_table(len(table))
    if m == 0:
        return [()] if s == 0 else []

    def probe(bounds: tuple[int, int]):
        found: list[Solution] = []
        pairs: list[tuple[int, int]] = []
        seen: set[Solution] = set()
        for p, q in _matches(table, s, bounds[0], bounds[1], counters):
            sol = _union(table, p, q)
            pairs.append((p, q))
            if sol not in seen:
                seen.add(sol)
                found.append(sol)
                if limit is not None and len(found) >= limit:
                    break
        return found, pairs

    chunks = run_tasks(probe, rank_ranges(len(table), chunk_count(len(table), threads)), threads)
    if collisions is not None:
        for _, pairs in chunks:
            collisions.extend(_pair(table, p, q) for p, q in pairs)
        collisions.sort(key=lambda c: (c.rank_a, c.rank_b))
    return merge_unique((found for found, _ in chunks), limit)


def solve_even(
    inst: ProblemInstance,
    limit: Optional[int] = None,
    *,
    threads: Optional[int] = 1,
    cap: int = DEFAULT_TABLE_CAP,
    counters: Optional[Counters] = None,
    collisions: Optional[list[CollisionPair]] = None,
) -> list[Solution]:
    if inst.m % 2:
        raise InvalidArgument(f"solve_even needs even m, got {inst.m}")
    if not in_range(inst):
        return []
    counters = Counters() if counters is None else counters
    return _even_core(
        inst.values, tuple(range(inst.n)), inst.m, inst.target, limit, threads, cap, counters, collisions
    )


def solve_odd(
    inst: ProblemInstance,
    limit: Optional[int] = None,
    *,
    threads: Optional[int] = 1,
    cap: int = DEFAULT_TABLE_CAP,
    counters: Optional[Counters] = None,
) -> list[Solution]:
    """Fix one index at a time and solve the even problem of size m - 1 on the others.

    Exclusions are tried in ascending order. Without ``limit`` every index is
    tried; with it the search stops after the exclusion that brings the
    number of distinct solutions up to ``limit``.
    """
    if inst.m % 2 == 0:
        raise InvalidArgument(f"solve_odd needs odd m, got {inst.m}")
    if not in_range(inst):
        return []
    counters = Counters() if counters is None else counters
    values, n = inst.values, inst.n
    seen: set[Solution] = set()
    found: list[Solution] = []
    for excluded in range(n):
        counters.add(exclusions=1)
        universe = tuple(i for i in range(n) if i != excluded)
        rest = _even_core(
            values, universe, inst.m - 1, checked(inst.target - values[excluded]), None, threads, cap, counters
        )
        for sub in rest:
            sol = tuple(sorted(sub + (excluded,)))
            if sol not in seen:
                seen.add(sol)
                found.append(sol)
        if limit is not None and len(found) >= limit:
            break
    return merge_unique([found], limit)


def solve(
    inst: ProblemInstance,
    limit: Optional[int] = None,
    use_complement: bool = True,
    *,
    threads: Optional[int] = 1,
    cap: int = DEFAULT_TABLE_CAP,
) -> SolverReport:
    """Dispatch on the parity of m, optionally through the complement instance when 2m > n."""
    started = time.perf_counter()
    counters = Counters()
    collisions: list[CollisionPair] = []
    if not in_range(inst):
        return SolverReport("mitm", [], status=INFEASIBLE, wall_time=(time.perf_counter() - started) * 1e3)
    flipped = use_complement and 2 * inst.m > inst.n
    work = complement_transform(inst) if flipped else inst
    if work.m % 2 == 0:
        solutions = solve_even(work, limit, threads=threads, cap=cap, counters=counters, collisions=collisions)
    else:
        solutions = solve_odd(work, limit, threads=threads, cap=cap, counters=counters)
    if flipped:
        solutions = sorted(complement_indices(sol, inst.n) for sol in solutions)
    report = SolverReport.from_counters("mitm", solutions, counters, (time.perf_counter() - started) * 1e3)
    report.collisions = collisions
    report.complemented = flipped
    return report
