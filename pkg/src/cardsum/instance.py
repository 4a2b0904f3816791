"""Problem instances, their feasible sum range, and the text file format.

File format::

    # optional comment lines
    n m S
    x_1 x_2 ... x_n

Readers accept any whitespace runs and let the values wrap across lines.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .arith import VALUE_LIMIT, checked, checked_sum, value_fits
from .errors import InfeasibleCardinality, ParseError, WidthError


@dataclass(frozen=True)
class ProblemInstance:
    values: tuple[int, ...]
    target: int
    cardinality: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if self.cardinality < 0:
            raise InfeasibleCardinality(f"cardinality must be >= 0, got {self.cardinality}")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def m(self) -> int:
        return self.cardinality

    def with_target(self, target: int) -> "ProblemInstance":
        return ProblemInstance(self.values, target, self.cardinality)


class FeasibleRange(NamedTuple):
    s_min: int
    s_max: int

    def __contains__(self, s: object) -> bool:
        return isinstance(s, int) and self.s_min <= s <= self.s_max


def _require_cardinality(inst: ProblemInstance) -> None:
    if inst.m > inst.n:
        raise InfeasibleCardinality(f"cannot choose m={inst.m} of n={inst.n} values")


def feasible_range(inst: ProblemInstance) -> FeasibleRange:
    """Sums of the m smallest and the m largest values.

    >>> feasible_range(ProblemInstance((5, 1, 3), 0, 2))
    FeasibleRange(s_min=4, s_max=8)
    """
    _require_cardinality(inst)
    ordered = sorted(inst.values)
    m = inst.m
    if m == 0:
        return FeasibleRange(0, 0)
    return FeasibleRange(checked_sum(ordered[:m]), checked_sum(ordered[-m:]))


def in_range(inst: ProblemInstance) -> bool:
    return inst.target in feasible_range(inst)


def total_sum(inst: ProblemInstance) -> int:
    return checked_sum(inst.values)


def complement_transform(inst: ProblemInstance) -> ProblemInstance:
    """Swap each m-subset for its complement: (m, S) -> (n - m, total - S)."""
    _require_cardinality(inst)
    return ProblemInstance(inst.values, checked(total_sum(inst) - inst.target), inst.n - inst.m)


def complement_indices(indices: Iterable[int], n: int) -> tuple[int, ...]:
    chosen = set(indices)
    return tuple(i for i in range(n) if i not in chosen)


_TOKEN = re.compile(r"\S+")


def _tokens(text: str) -> Iterable[tuple[str, int, int]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        for match in _TOKEN.finditer(line):
            yield match.group(), lineno, match.start() + 1


def _to_int(token: str, line: int, col: int, limit: int | None = VALUE_LIMIT) -> int:
    try:
        value = int(token, 10)
    except ValueError:
        raise ParseError(f"expected an integer, found {token!r}", line, col) from None
    if limit is not None and not value_fits(value):
        raise WidthError(f"{token} exceeds the supported magnitude 2^62", line, col)
    return value


def parse_instance(text: str | bytes) -> ProblemInstance:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    tokens = list(_tokens(text))
    if len(tokens) < 3:
        line, col = (tokens[-1][1], tokens[-1][2]) if tokens else (1, 1)
        raise ParseError("header needs three integers 'n m S'", line, col)
    (tn, ln, cn), (tm, lm, cm), (ts, ls, cs) = tokens[:3]
    n = _to_int(tn, ln, cn, limit=None)
    m = _to_int(tm, lm, cm, limit=None)
    if n < 0:
        raise ParseError(f"n must be non-negative, got {n}", ln, cn)
    if m < 0:
        raise ParseError(f"m must be non-negative, got {m}", lm, cm)
    target = _to_int(ts, ls, cs, limit=None)
    try:
        checked(target, "target")
    except OverflowError:
        raise WidthError(f"target {target} exceeds the 128-bit accumulator", ls, cs) from None
    body = tokens[3:]
    if len(body) != n:
        line, col = (body[n][1], body[n][2]) if len(body) > n else (ls, cs)
        raise ParseError(f"header announces {n} values, found {len(body)}", line, col)
    values = tuple(_to_int(tok, line, col) for tok, line, col in body)
    return ProblemInstance(values, target, m)


def render_instance(inst: ProblemInstance, comments: Iterable[str] = ()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    return f"{head}{inst.n} {inst.m} {inst.target}\n{' '.join(map(str, inst.values))}\n"


def load_instance(path) -> ProblemInstance:
    with open(path, "rb") as fh:
        return parse_instance(fh.read())
