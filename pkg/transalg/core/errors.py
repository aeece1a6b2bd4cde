"""Exception hierarchy.

Failed algebraic conditions are not errors: they are FAIL records in a
CheckReport. Exceptions are reserved for bad input and broken invariants.
"""

from __future__ import annotations

from typing import Optional


class TransalgError(Exception):
    """Base class for every error raised by transalg."""


class UsageError(TransalgError, ValueError):
    """A precondition or a configured bound was violated by the caller."""


class ParseError(UsageError):
    """Malformed map literal or algebra file."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


class IntegrityError(TransalgError, RuntimeError):
    """A set of maps claimed to be closed is not closed."""

    def __init__(self, message: str, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"{message} (offending pair {pair})")
