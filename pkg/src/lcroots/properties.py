"""Numerical verifiers for the geometric facts the solver rests on.

Two facts are checked by sampling rather than assumed: the reciprocal-style
image b/z of a line avoiding the origin is a circle through the origin, and
the triangle (0, p1, r1) is similar to (r1, p1, c2/p1), which makes the
angle at p1 bisect cleanly. A seeded generator of well-conditioned
instances drives both, plus the randomized validation batches.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .cgeom import Circle, CollinearPoints, ParametricLine, circle_through_origin
from .config import DEFAULT_TOLERANCES, Tolerances
from .quadratic import QuadraticCoefficients, bisector_direction, solve

# Contract bounds for the verifiers, used by the CLI verify command.
MOBIUS_RADIAL_BOUND = 1e-9
MOBIUS_ORIGIN_GAP_BOUND = 1e-12
SIMILARITY_RATIO_BOUND = 1e-10
SIMILARITY_ANGLE_BOUND = 1e-10
THETA_AGREEMENT_BOUND = 1e-9

_ORIGIN_CLEARANCE = 1e-9
_MASK64 = (1 << 64) - 1


class ZeroMultiplier(ValueError):
    """b = 0 maps every point to the origin; nothing to verify."""


class GeneratorExhausted(RuntimeError):
    """Rejection sampling failed to find an admissible instance."""


@dataclass(frozen=True)
class MobiusReport:
    """Worst-case deviations of sampled line images from the fitted circle.

    origin_gap is | |center| - radius | relative; tail_magnitude is the
    image magnitude at the largest sampled |t|, which must shrink toward 0
    as the parameter runs out along the line.
    """

    fitted_circle: Circle
    max_radial_residual: float
    origin_gap: float
    tail_magnitude: float


def verify_mobius_line_to_circle(
    b: complex,
    line: ParametricLine,
    sample_count: int = 100,
    t_max: float = 1e4,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> MobiusReport:
    """Check that t -> b / line.point_at(t) traces a circle through 0.

    The circle is fitted from the images of t = 0 and t = 1 only; every
    other sample must then land on it. Samples are spread tangent-style
    over [-t_max, t_max] so both the far tails and the neighbourhood of the
    fixed point are covered instead of bunching on one small arc.
    """
    if b == 0:
        raise ZeroMultiplier("b must be nonzero")
    if sample_count < 3:
        raise ValueError(f"sample_count must be >= 3, got {sample_count}")
    if not (t_max > 0):
        raise ValueError(f"t_max must be positive, got {t_max}")
    if line.distance_to(0j) <= _ORIGIN_CLEARANCE * abs(line.fixed_point):
        raise CollinearPoints(
            "line passes through the origin, so its image is a line, not a circle"
        )
    w1 = b / line.fixed_point
    w2 = b / line.point_at(1.0)
    circle = circle_through_origin(w1, w2, tol)
    spread = math.atan(t_max)
    worst = 0.0
    tail = 0.0
    for k in range(sample_count):
        u = -spread + (2.0 * spread) * k / (sample_count - 1)
        t = math.tan(u)
        z = line.point_at(t)
        if z == 0:  # unreachable once the origin clearance holds
            continue
        image = b / z
        worst = max(worst, circle.radial_residual(image))
        if k == 0 or k == sample_count - 1:
            tail = max(tail, abs(image))
    origin_gap = abs(abs(circle.center) - circle.radius) / max(circle.radius, 1.0)
    return MobiusReport(circle, worst, origin_gap, tail)


@dataclass(frozen=True)
class SimilarityReport:
    """Side ratios and vertex angles of the two triangles sharing p1.

    ratio_A = |0 -> p1| / |r -> p1|, ratio_B = |p1 -> r| / |p1 -> c2/p1|,
    ratio_C = |0 -> r| / |r -> c2/p1|; all three must equal
    |r1 + r2| / |r1 - r2|. angle_left and angle_right are the unsigned
    angles at p1 on either side of the ray toward r.
    """

    ratio_A: float
    ratio_B: float
    ratio_C: float
    expected_ratio: float
    angle_left: float
    angle_right: float
    root: complex
    used_bisector_root: bool


def _vertex_angle(a: complex, b: complex) -> float:
    """Unsigned angle in [0, pi] between vectors a and b."""
    cr = a.conjugate() * b
    return math.atan2(abs(cr.imag), cr.real)


def _similarity_report(
    p1: complex,
    w: complex,
    r: complex,
    other: complex,
    used_bisector_root: bool,
) -> SimilarityReport:
    expected = abs(r + other) / abs(r - other)
    return SimilarityReport(
        ratio_A=abs(p1) / abs(r - p1),
        ratio_B=abs(r - p1) / abs(w - p1),
        ratio_C=abs(r) / abs(w - r),
        expected_ratio=expected,
        angle_left=_vertex_angle(-p1, r - p1),
        angle_right=_vertex_angle(r - p1, w - p1),
        root=r,
        used_bisector_root=used_bisector_root,
    )


def _similarity_holds(rep: SimilarityReport) -> bool:
    ratios = (rep.ratio_A, rep.ratio_B, rep.ratio_C)
    if any(
        abs(r - rep.expected_ratio) > SIMILARITY_RATIO_BOUND * rep.expected_ratio
        for r in ratios
    ):
        return False
    return abs(rep.angle_left - rep.angle_right) <= SIMILARITY_ANGLE_BOUND


def verify_triangle_similarity(
    coeffs: QuadraticCoefficients,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> SimilarityReport:
    """Measure the similar-triangle property at one solved instance.

    The root used is the one the bisector ray at p1 points toward; should
    the measured ratios disagree for that root, the mirrored statement is
    tried with the other root and the report says which one matched.
    """
    report = solve(coeffs, tol=tol)
    p1 = -coeffs.c1 / 2.0
    w = coeffs.c2 / p1
    bis = bisector_direction(p1, w)
    first, second = report.roots
    if (bis.conjugate() * (second - p1)).real > (bis.conjugate() * (first - p1)).real:
        first, second = second, first
    rep = _similarity_report(p1, w, first, second, used_bisector_root=True)
    if not _similarity_holds(rep):
        retry = _similarity_report(p1, w, second, first, used_bisector_root=False)
        if _similarity_holds(retry):
            return retry
    return rep


def instance_seed(seed: int, index: int) -> int:
    """Stable 64-bit mix of (seed, index); the sole randomness source per trial.

    splitmix64 finalizer, so batches can be partitioned across workers by
    index with bit-identical results.
    """
    x = (seed * 0x9E3779B97F4A7C15 + index + 1) & _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


def random_regular_instance(
    seed: int,
    scale: float,
    margin: float = 1e-3,
) -> tuple[QuadraticCoefficients, tuple[complex, complex]]:
    """Coefficients with known roots, kept clear of every degeneracy.

    Roots are drawn uniformly from the square [-scale, scale]^2 and
    redrawn until they are separated, nonzero and not collinear with the
    origin, each by ``margin`` (times scale where dimensional). The default
    margin keeps instances well conditioned; shrink it to stress the
    classifier boundary.
    """
    if not (scale > 0):
        raise ValueError(f"scale must be positive, got {scale}")
    rng = random.Random(seed)
    floor = margin * scale
    for _ in range(1000):
        r1 = complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))
        r2 = complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))
        if abs(r1 - r2) <= floor:
            continue
        if abs(r1) <= floor or abs(r2) <= floor:
            continue
        if abs((r2 / r1).imag) <= margin:
            continue
        return QuadraticCoefficients(-(r1 + r2), r1 * r2), (r1, r2)
    raise GeneratorExhausted(f"no admissible instance in 1000 draws (seed={seed})")
