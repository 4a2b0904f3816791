"""Checked integer arithmetic.

Python integers never wrap, so "overflow" here means leaving the signed
128-bit accumulator range the solvers promise to stay within. Any result
outside that range raises :class:`CapacityError` instead of being returned.
"""

from __future__ import annotations

from typing import Final, Iterable

from .errors import CapacityError

#: Largest magnitude accepted for a single input value.
VALUE_LIMIT: Final[int] = 1 << 62
#: Bounds of the signed 128-bit accumulator.
ACC_MAX: Final[int] = (1 << 127) - 1
ACC_MIN: Final[int] = -(1 << 127)


def checked(x: int, what: str = "value") -> int:
    """Return ``x`` unchanged if it fits the accumulator, else raise.

    >>> checked(5)
    5
    >>> checked(1 << 127)
    Traceback (most recent call last):
    ...
    cardsum.errors.CapacityError: value 170141183460469231731687303715884105728 exceeds 128-bit accumulator
    """
    if x > ACC_MAX or x < ACC_MIN:
        raise CapacityError(f"{what} {x} exceeds 128-bit accumulator")
    return x


def checked_sum(xs: Iterable[int]) -> int:
    total = 0
    for x in xs:
        total += x
    return checked(total, "sum")


def checked_mul(a: int, b: int) -> int:
    return checked(a * b, "product")


def value_fits(x: int) -> bool:
    return -VALUE_LIMIT <= x <= VALUE_LIMIT
