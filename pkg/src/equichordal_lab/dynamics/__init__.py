"""Floating-point dynamics of the planar map and the invariant curves near its axis."""

from .planar_map import (
    MapParams,
    PlanePoint,
    extended_jacobian,
    finite_difference_jacobian,
    frechet_at_axis,
    g_domain_contains,
    g_map,
    g_map_array,
    g_map_by_walks,
    h_map,
    inverse_law_defect,
    inverse_witness,
    is_period_two,
    multiplier,
)
from .projection import (
    ConvergenceDiagnostics,
    FiberSample,
    default_trust_radius,
    fiber_point,
    project_pi,
    trace_invariant_curve,
)

__all__ = [
    "ConvergenceDiagnostics",
    "FiberSample",
    "MapParams",
    "PlanePoint",
    "default_trust_radius",
    "extended_jacobian",
    "fiber_point",
    "finite_difference_jacobian",
    "frechet_at_axis",
    "g_domain_contains",
    "g_map",
    "g_map_array",
    "g_map_by_walks",
    "h_map",
    "inverse_law_defect",
    "inverse_witness",
    "is_period_two",
    "multiplier",
    "project_pi",
    "trace_invariant_curve",
]
