from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

#: Smallest number of items worth handing to a worker thread.
MIN_GRAIN = 256


def default_threads() -> int:
    return os.cpu_count() or 1


@lru_cache(maxsize=None)
def _pool(threads: int) -> ThreadPoolExecutor:
    # kept for the life of the process; tasks submitted here must not submit to a pool themselves
    return ThreadPoolExecutor(max_workers=threads, thread_name_prefix=f"cardsum{threads}")


def run_tasks(fn: Callable[[T], R], tasks: Sequence[T], threads: Optional[int] = None) -> list[R]:
    """Apply ``fn`` to every task; results come back in task order whatever the pool size."""
    threads = default_threads() if threads is None else threads
    if threads <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    return list(_pool(threads).map(fn, tasks))


def chunk_count(total: int, threads: Optional[int], grain: Optional[int] = None) -> int:
    """Number of work slices for ``total`` items: one per thread, but no slice below ``grain`` items."""
    threads = default_threads() if threads is None else threads
    grain = MIN_GRAIN if grain is None else max(1, grain)
    return max(1, min(threads, total // grain))


def merge_unique(chunks: Iterable[Iterable[tuple[int, ...]]], limit: Optional[int] = None) -> list[tuple[int, ...]]:
    """Concatenate per-task solution lists in order, drop repeats, truncate, then sort."""
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []
    for chunk in chunks:
        for sol in chunk:
            if sol in seen:
                continue
            seen.add(sol)
            out.append(sol)
            if limit is not None and len(out) >= limit:
                return sorted(out)
    return sorted(out)
