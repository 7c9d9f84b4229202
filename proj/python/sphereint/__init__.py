"""Normal spheres in connected sums of S2xS1: crossing, translate counts and circle counts."""

from ._core import (
    Graph,
    Sphere,
    SphereError,
    canonical,
    circles_over,
    complex_dot,
    complex_edges,
    crosses,
    enumerate,
    intersect,
    is_embedded,
    parse_sphere,
    serialize_sphere,
    system_sphere,
    theorem_check,
    translate,
)

__all__ = [
    "Graph",
    "Sphere",
    "SphereError",
    "canonical",
    "circles_over",
    "complex_dot",
    "complex_edges",
    "crosses",
    "enumerate",
    "intersect",
    "is_embedded",
    "parse_sphere",
    "serialize_sphere",
    "system_sphere",
    "theorem_check",
    "translate",
]
