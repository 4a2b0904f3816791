"""Exception hierarchy shared by every solver module."""

from __future__ import annotations


class CardsumError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(CardsumError, ValueError):
    pass


class CapacityError(CardsumError, OverflowError):
    """A configured cap (integer width, table size, enumeration size) was exceeded."""


class InfeasibleCardinality(InvalidArgument):
    """Requested cardinality m exceeds the number of values n."""


class ParseError(CardsumError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class WidthError(ParseError, CapacityError):
    """An input integer lies outside the supported magnitude."""
