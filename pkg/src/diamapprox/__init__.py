"""Exact and certified-approximate diameters of finite point sets."""

from .algorithms import (
    C_STAR,
    C_STAR_2D,
    DOUBLE_SWEEP_SQRT3,
    ONE_SWEEP,
    RHO_STAR,
    RHO_STAR_BALL,
    SQRT3,
    CertifiedBounds,
    DiameterEstimate,
    RunConfig,
    c_star_estimate_2d,
    compute_p_prime,
    compute_q,
    double_sweep,
    iterative_approx,
    randomized_approx,
)
from .exact import (
    ExactResult,
    brute_force_diameter,
    convex_hull_2d,
    rotating_calipers_diameter_2d,
)
from .generators import (
    GeneratorSpec,
    default_ellipsoid_axes,
    generate,
    worst_case_five_points,
)
from .pointset import EvalCounter, FarthestResult, PointSet, distance, farthest

__all__ = [
    "C_STAR",
    "C_STAR_2D",
    "DOUBLE_SWEEP_SQRT3",
    "ONE_SWEEP",
    "RHO_STAR",
    "RHO_STAR_BALL",
    "SQRT3",
    "CertifiedBounds",
    "DiameterEstimate",
    "EvalCounter",
    "ExactResult",
    "FarthestResult",
    "GeneratorSpec",
    "PointSet",
    "RunConfig",
    "brute_force_diameter",
    "c_star_estimate_2d",
    "compute_p_prime",
    "compute_q",
    "convex_hull_2d",
    "default_ellipsoid_axes",
    "distance",
    "double_sweep",
    "farthest",
    "generate",
    "iterative_approx",
    "randomized_approx",
    "rotating_calipers_diameter_2d",
    "worst_case_five_points",
]

__version__ = "0.1.0"
