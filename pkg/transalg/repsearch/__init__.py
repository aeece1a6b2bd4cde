"""transalg.repsearch: representations of abstract systems by partial maps."""

from transalg.repsearch.search import (
    ConditionsFail,
    Found,
    NotFoundUpToBound,
    Representation,
    SearchOrder,
    SearchOutcome,
    find_representation,
    verify_representation,
)

__all__ = [
    "ConditionsFail",
    "Found",
    "NotFoundUpToBound",
    "Representation",
    "SearchOrder",
    "SearchOutcome",
    "find_representation",
    "verify_representation",
]
