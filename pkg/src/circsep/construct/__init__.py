"""Constructions of separating families."""

from .arc import ArcRemovalParam, arc_removal, nesting_violation
from .sp import Parallel, ReductionTrace, Series, sp_construct, sp_reduce
from .two_outer import (
    Region,
    construct_biconnected,
    construct_connected,
    construct_general,
    construct_two_outerplanar,
    regions_of,
)

__all__ = [
    "ArcRemovalParam",
    "Parallel",
    "ReductionTrace",
    "Region",
    "Series",
    "arc_removal",
    "construct_biconnected",
    "construct_connected",
    "construct_general",
    "construct_two_outerplanar",
    "nesting_violation",
    "regions_of",
    "sp_construct",
    "sp_reduce",
]
