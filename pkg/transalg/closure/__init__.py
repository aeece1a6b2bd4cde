"""transalg.closure: G*, F1, the f-closure and χ₀.

Usage::

    from transalg.closure import f_closure, chi0, check_prop7

    closed = f_closure(system, {0})
    report = check_prop7(system, chi0(system))
"""

from transalg.closure.chi0 import check_chi0_minimality, check_prop7, chi0
from transalg.closure.fclosure import (
    F1,
    closure_chain,
    closure_oracle,
    f_closure,
    is_f_closed,
    is_f_closed_prop6,
    left_translation_witness,
)
from transalg.closure.star import StarExtension, boxdot_leq, star_delta, star_extension, star_leq, star_mul
from transalg.closure.unrolled import Fn_unrolled, Reading, check_schemas

__all__ = [
    "F1",
    "Fn_unrolled",
    "Reading",
    "StarExtension",
    "boxdot_leq",
    "check_chi0_minimality",
    "check_prop7",
    "check_schemas",
    "chi0",
    "closure_chain",
    "closure_oracle",
    "f_closure",
    "is_f_closed",
    "is_f_closed_prop6",
    "left_translation_witness",
    "star_delta",
    "star_extension",
    "star_leq",
    "star_mul",
]
