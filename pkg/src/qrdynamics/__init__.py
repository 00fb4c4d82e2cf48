"""Explicit quasiregular maps with wandering domains, with an orbit engine,
numerical dilatation analysis and escape-time rendering."""

from .dynamics import (
    DynamicsConfig,
    GridSpec,
    Label,
    LabelGrid,
    OrbitResult,
    classify_grid,
    first_exit_time,
    iterate_orbit,
)
from .maps import (
    DomainError,
    MapKind,
    MapSpec,
    Mode,
    PlanarPoint,
    degree_map,
    dyadic_map,
    evaluate,
    poly_map,
    stretch_map,
    stretch_profile,
    transcendental_map,
)
from .regions import EscapeSeeds

__version__ = "0.1.0"
