"""Constant-curvature chain geometry and comparison checks."""

from ._core import (
    DomainError,
    EmbeddabilityError,
    GeneratorError,
    UsageError,
    __version__,
    check_growing_sphere,
    check_sphere_to_plane,
    compare_angles_two_spheres,
    endpoint_distance,
    is_convex,
    iterated_midchord,
    legendre_order_fit,
    legendre_planar_angles,
    midchord_length,
    open_arm,
    run_suite,
    solve_sas,
    solve_sss,
    spherical_excess,
    sweep_radius,
)

__all__ = [
    "DomainError",
    "EmbeddabilityError",
    "GeneratorError",
    "UsageError",
    "__version__",
    "check_growing_sphere",
    "check_sphere_to_plane",
    "compare_angles_two_spheres",
    "endpoint_distance",
    "is_convex",
    "iterated_midchord",
    "legendre_order_fit",
    "legendre_planar_angles",
    "midchord_length",
    "open_arm",
    "run_suite",
    "solve_sas",
    "solve_sss",
    "spherical_excess",
    "sweep_radius",
]
