"""transalg.maps: partial transformations and ∩-semigroups of them."""

from transalg.maps.pfun import UNDEFINED, PartialMap, compose, meet, parse_map, parse_map_list, rel_chi, rel_delta, rel_zeta
from transalg.maps.tsemi import TransSemigroup, enumerate_all, extract_abstract, generate

__all__ = [
    "UNDEFINED",
    "PartialMap",
    "TransSemigroup",
    "compose",
    "enumerate_all",
    "extract_abstract",
    "generate",
    "meet",
    "parse_map",
    "parse_map_list",
    "rel_chi",
    "rel_delta",
    "rel_zeta",
]
