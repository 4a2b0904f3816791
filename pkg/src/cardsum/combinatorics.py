"""Binomial coefficients and lexicographic k-combinations of ``range(n)``.

Combinations are strictly increasing index tuples. Ranks are 0-based
positions in lexicographic order, computed through the combinatorial number
system: the lexicographic rank of ``c`` is ``C(n, k) - 1`` minus the
colexicographic rank of its mirror image ``(n-1-c[k-1], ..., n-1-c[0])``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import InvalidArgument


def binomial(n: int, k: int) -> int:
    """Exact ``C(n, k)``; zero when ``k > n``.

    >>> binomial(16, 3), binomial(7, 3), binomial(5, 7)
    (560, 35, 0)
    """
    if n < 0 or k < 0:
        raise InvalidArgument(f"binomial needs n, k >= 0 (got n={n}, k={k})")
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # exact at every step: result * (n-k+i) is divisible by i
        result = result * (n - k + i) // i
    return result


@dataclass(frozen=True)
class Combination:
    indices: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        validate(self.indices, self.n)

    @property
    def k(self) -> int:
        return len(self.indices)


def validate(indices: Sequence[int], n: int) -> None:
    if len(indices) > n:
        raise InvalidArgument(f"combination of length {len(indices)} over n={n}")
    prev = -1
    for i in indices:
        if i <= prev or i >= n:
            raise InvalidArgument(f"{tuple(indices)} is not a strictly increasing subset of range({n})")
        prev = i


def first_combination(n: int, k: int) -> Combination:
    if k < 0 or k > n:
        raise InvalidArgument(f"no {k}-combinations of {n} elements")
    return Combination(tuple(range(k)), n)


def next_indices(c: Sequence[int], n: int) -> Optional[tuple[int, ...]]:
    """Lexicographic successor of the index tuple ``c``, or ``None`` after the last one."""
    k = len(c)
    i = k - 1
    while i >= 0 and c[i] == n - k + i:
        i -= 1
    if i < 0:
        return None
    head = c[i] + 1
    return tuple(c[:i]) + tuple(range(head, head + k - i))


def next_combination(c: Combination) -> Optional[Combination]:
    nxt = next_indices(c.indices, c.n)
    return None if nxt is None else Combination(nxt, c.n)


def rank_indices(c: Sequence[int], n: int) -> int:
    k = len(c)
    colex = 0
    for pos, ci in enumerate(reversed(c)):
        colex += binomial(n - 1 - ci, pos + 1)
    return binomial(n, k) - 1 - colex


def rank(c: Combination) -> int:
    """Position of ``c`` in lexicographic order.

    >>> rank(Combination((4, 5, 6), 7))
    34
    """
    return rank_indices(c.indices, c.n)


def unrank_indices(n: int, k: int, r: int) -> tuple[int, ...]:
    total = binomial(n, k)
    if not 0 <= r < total:
        raise InvalidArgument(f"rank {r} outside [0, {total}) for n={n}, k={k}")
    colex = total - 1 - r
    mirrored = []
    top = n - 1
    for i in range(k, 0, -1):
        # largest d with C(d, i) <= colex
        d = top
        while binomial(d, i) > colex:
            d -= 1
        mirrored.append(d)
        colex -= binomial(d, i)
        top = d - 1
    return tuple(n - 1 - d for d in mirrored)


def unrank(n: int, k: int, r: int) -> Combination:
    return Combination(unrank_indices(n, k, r), n)


def iter_indices(n: int, k: int, start: int = 0, stop: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Yield the combinations with ranks in ``[start, stop)`` in lexicographic order."""
    total = binomial(n, k)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return iter(())
    # itertools.combinations emits lexicographic order; skipping in C beats unranking here
    return itertools.islice(itertools.combinations(range(n), k), start, stop)


def rank_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split ``range(total)`` into at most ``parts`` contiguous nonempty ranges."""
    parts = max(1, min(parts, total))
    return [(total * i // parts, total * (i + 1) // parts) for i in range(parts)] if total else []
