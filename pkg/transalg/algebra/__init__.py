"""transalg.algebra: finite abstract systems, their file format and checkers."""

from transalg.algebra.base import (
    E,
    AbstractSystem,
    CheckRecord,
    CheckReport,
    Elem,
    Relation,
    StarElement,
)
from transalg.algebra.checks import (
    battery,
    check_dt1,
    check_dt2,
    check_dt3,
    check_dt4,
    check_f_tr14,
    check_theorem3,
    check_theorem4,
    check_theorem7,
    is_semigroup,
    is_semilattice,
    natural_order,
    relation_properties,
)
from transalg.algebra.fileformat import dump, load, parse, serialize

__all__ = [
    "AbstractSystem",
    "CheckRecord",
    "CheckReport",
    "E",
    "Elem",
    "Relation",
    "StarElement",
    "battery",
    "check_dt1",
    "check_dt2",
    "check_dt3",
    "check_dt4",
    "check_f_tr14",
    "check_theorem3",
    "check_theorem4",
    "check_theorem7",
    "dump",
    "is_semigroup",
    "is_semilattice",
    "load",
    "natural_order",
    "parse",
    "relation_properties",
    "serialize",
]
