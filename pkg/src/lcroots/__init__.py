"""Geometric root finder for complex quadratics.

The roots of x^2 + c1*x + c2 = 0 sit on a line through their midpoint
-c1/2; dividing c2 by the points of that line traces a circle through the
origin, and the roots are the two intersections. The package builds that
structure, solves through it, validates it against a direct reference
solver, and ships a CLI for solving, plotting and randomized verification.
"""

from .cgeom import (
    Circle,
    CollinearPoints,
    Intersection,
    ParametricLine,
    ZeroArgument,
    argument,
    circle_through_origin,
    intersect_line_circle,
    line_angle_gap,
    reduce_mod_pi,
    unit_direction,
)
from .config import DEFAULT_TOLERANCES, Tolerances
from .literals import ComplexParseError, format_complex, parse_complex
from .oracle import MatchResult, match_roots, quadratic_formula
from .properties import (
    GeneratorExhausted,
    MobiusReport,
    SimilarityReport,
    ZeroMultiplier,
    instance_seed,
    random_regular_instance,
    verify_mobius_line_to_circle,
    verify_triangle_similarity,
)
from .quadratic import (
    BisectorUndefined,
    DegeneracyClass,
    DegenerateInput,
    DoubleRootDegenerate,
    LcConstruction,
    NoIntersection,
    QuadraticCoefficients,
    RootReport,
    build_construction,
    classify,
    compute_theta,
    solve,
    theta_via_bisection,
)

__version__ = "0.1.0"

__all__ = [
    "Circle",
    "CollinearPoints",
    "Intersection",
    "ParametricLine",
    "ZeroArgument",
    "argument",
    "circle_through_origin",
    "intersect_line_circle",
    "line_angle_gap",
    "reduce_mod_pi",
    "unit_direction",
    "DEFAULT_TOLERANCES",
    "Tolerances",
    "ComplexParseError",
    "format_complex",
    "parse_complex",
    "MatchResult",
    "match_roots",
    "quadratic_formula",
    "GeneratorExhausted",
    "MobiusReport",
    "SimilarityReport",
    "ZeroMultiplier",
    "instance_seed",
    "random_regular_instance",
    "verify_mobius_line_to_circle",
    "verify_triangle_similarity",
    "BisectorUndefined",
    "DegeneracyClass",
    "DegenerateInput",
    "DoubleRootDegenerate",
    "LcConstruction",
    "NoIntersection",
    "QuadraticCoefficients",
    "RootReport",
    "build_construction",
    "classify",
    "compute_theta",
    "solve",
    "theta_via_bisection",
]
