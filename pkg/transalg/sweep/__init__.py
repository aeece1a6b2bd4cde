"""transalg.sweep: corpus-wide property evaluation."""

from transalg.sweep.properties import PROPERTIES, PropertySpec, SweepItem, SweepLimits, get_property, list_properties
from transalg.sweep.runner import SweepResult, corpus_items, run_sweep

__all__ = [
    "PROPERTIES",
    "PropertySpec",
    "SweepItem",
    "SweepLimits",
    "SweepResult",
    "corpus_items",
    "get_property",
    "list_properties",
    "run_sweep",
]
