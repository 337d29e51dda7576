"""Geometric solver for complex quadratics x^2 + c1*x + c2 = 0.

The two roots lie on a line through their midpoint p1 = -c1/2. Dividing the
constant term by every point of that line sweeps out a circle through the
origin, and the roots are exactly where line and circle meet. This module
builds the structure from the coefficients, classifies inputs that break
its preconditions, intersects, and polishes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import oracle
from .cgeom import (
    Circle,
    CollinearPoints,
    ParametricLine,
    argument,
    circle_through_origin,
    intersect_line_circle,
    reduce_mod_pi,
    require_finite,
    unit_direction,
)
from .config import DEFAULT_TOLERANCES, Tolerances

# Below this, the two arm directions at p1 are treated as exactly opposite
# and the bisector degenerates to the shared perpendicular.
BISECTOR_COLLAPSE = 1e-9


class DegeneracyClass(Enum):
    """Why (or that) a coefficient pair is admissible for the construction."""

    REGULAR = "Regular"
    DOUBLE_ROOT = "DoubleRoot"
    ZERO_ROOT = "ZeroRoot"
    LINE_THROUGH_ORIGIN = "LineThroughOrigin"


class DegenerateInput(ValueError):
    """The construction's preconditions fail for these coefficients."""

    def __init__(self, degeneracy: DegeneracyClass, message: str | None = None):
        self.degeneracy = degeneracy
        super().__init__(message or f"degenerate input: {degeneracy.value}")


class DoubleRootDegenerate(DegenerateInput):
    """The two roots coincide, so the line has no defined inclination."""

    def __init__(self, message: str | None = None):
        super().__init__(DegeneracyClass.DOUBLE_ROOT, message)


class NoIntersection(RuntimeError):
    """Line and circle failed to meet twice for a regular input.

    Should be unreachable; seeing it means the tolerance record is
    misconfigured for the data fed in.
    """


class BisectorUndefined(RuntimeError):
    """One arm of the angle at p1 has zero length (coincident roots)."""


@dataclass(frozen=True)
class QuadraticCoefficients:
    c1: complex
    c2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1", require_finite(self.c1, "c1"))
        object.__setattr__(self, "c2", require_finite(self.c2, "c2"))

    def evaluate(self, x: complex) -> complex:
        return (x + self.c1) * x + self.c2


@dataclass(frozen=True)
class LcConstruction:
    """The full geometric structure built from one coefficient pair.

    p1: midpoint of the roots, the line's fixed point.
    v_d: c2 - p1**2, the raw vector whose half-argument fixes the line.
    theta_star: line inclination in (-pi/2, pi/2].
    w1, w2: c2/p1 and c2/(p1 + direction), the two circle sample points.
    """

    p1: complex
    v_d: complex
    theta_star: float
    line: ParametricLine
    w1: complex
    w2: complex
    circle: Circle


@dataclass(frozen=True)
class RootReport:
    """Matched root pair, ordered by ascending line parameter.

    residual1/residual2 are |r^2 + c1*r + c2| at each root. ``fallback``
    marks results taken from the reference solver because the geometric
    path degenerated or failed its quality gate; ``construction`` is None
    when the structure itself could not be fitted.
    """

    r1: complex
    r2: complex
    residual1: float
    residual2: float
    construction: LcConstruction | None
    polished: bool
    fallback: bool

    @property
    def roots(self) -> tuple[complex, complex]:
        return (self.r1, self.r2)


def _scale(coeffs: QuadraticCoefficients) -> float:
    # c1 enters squared so both terms carry the same units.
    return max(abs(coeffs.c1) ** 2, abs(coeffs.c2), 1.0)


def classify(
    coeffs: QuadraticCoefficients,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> DegeneracyClass:
    """Sort coefficients into Regular or one of three degeneracies.

    DoubleRoot: c1^2/4 - c2 (the squared half-separation of the roots)
    vanishes. ZeroRoot: c2 vanishes, so one root is 0. LineThroughOrigin:
    0, r1, r2 are collinear, detected through the reference roots since the
    condition has no simple coefficient form.
    """
    s = _scale(coeffs)
    half_sep_sq = coeffs.c1 * coeffs.c1 / 4.0 - coeffs.c2
    if abs(half_sep_sq) <= tol.degenerate * s:
        return DegeneracyClass.DOUBLE_ROOT
    if abs(coeffs.c2) <= tol.degenerate * s:
        return DegeneracyClass.ZERO_ROOT
    p1 = -coeffs.c1 / 2.0
    if abs(p1) <= tol.degenerate * math.sqrt(s):
        return DegeneracyClass.LINE_THROUGH_ORIGIN
    ra, rb = oracle.quadratic_formula(coeffs)
    ratio = rb / ra  # ra is the larger root and nonzero past the ZeroRoot gate
    if abs(ratio.imag) <= tol.degenerate * abs(ratio):
        return DegeneracyClass.LINE_THROUGH_ORIGIN
    return DegeneracyClass.REGULAR


def compute_theta(
    coeffs: QuadraticCoefficients,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """Inclination of the root line: arg(c1^2/4 - c2) / 2, in (-pi/2, pi/2]."""
    s = _scale(coeffs)
    half_sep_sq = coeffs.c1 * coeffs.c1 / 4.0 - coeffs.c2
    if abs(half_sep_sq) <= tol.degenerate * s:
        raise DoubleRootDegenerate(
            "c1^2/4 - c2 vanishes: coincident roots leave the inclination undefined"
        )
    return argument(half_sep_sq) / 2.0


def _construct(coeffs: QuadraticCoefficients, tol: Tolerances) -> LcConstruction:
    # Assumes classify() already said Regular.
    p1 = -coeffs.c1 / 2.0
    v_d = coeffs.c2 - p1 * p1
    theta = argument(-v_d) / 2.0
    direction = unit_direction(theta)
    line = ParametricLine(p1, direction)
    w1 = coeffs.c2 / p1
    w2 = coeffs.c2 / (p1 + direction)
    circle = circle_through_origin(w1, w2, tol)
    return LcConstruction(p1, v_d, theta, line, w1, w2, circle)


def build_construction(
    coeffs: QuadraticCoefficients,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> LcConstruction:
    """Build line and circle for a regular coefficient pair.

    Raises DegenerateInput for non-regular inputs. CollinearPoints from the
    circle fit propagates: it flags a borderline line through the origin
    that the classifier's thresholds let through.
    """
    cls = classify(coeffs, tol)
    if cls is not DegeneracyClass.REGULAR:
        raise DegenerateInput(cls)
    return _construct(coeffs, tol)


def _newton_polish(root: complex, coeffs: QuadraticCoefficients, max_steps: int = 2) -> complex:
    """Up to ``max_steps`` Newton iterations, keeping only residual decreases."""
    best = root
    best_res = abs(coeffs.evaluate(root))
    r = root
    for _ in range(max_steps):
        d = 2.0 * r + coeffs.c1
        if d == 0:
            break
        r = r - coeffs.evaluate(r) / d
        res = abs(coeffs.evaluate(r))
        if res >= best_res:
            break
        best, best_res = r, res
    return best


def _passes_quality_gate(
    coeffs: QuadraticCoefficients,
    roots: tuple[complex, complex],
    residuals: tuple[float, float],
    tol: Tolerances,
) -> bool:
    """Residuals plus both Vieta identities, at the root tolerance.

    The sum identity catches the one failure mode small residuals miss:
    both intersections collapsing onto the same root.
    """
    if max(residuals) > tol.root * max(abs(coeffs.c2), 1.0):
        return False
    r1, r2 = roots
    if abs((r1 + r2) + coeffs.c1) > tol.root * max(abs(coeffs.c1), 1.0):
        return False
    if abs(r1 * r2 - coeffs.c2) > tol.root * max(abs(coeffs.c2), 1.0):
        return False
    return True


def _oracle_fallback(
    coeffs: QuadraticCoefficients,
    construction: LcConstruction | None,
    tol: Tolerances,
) -> RootReport:
    ra, rb = oracle.quadratic_formula(coeffs)
    if construction is not None:
        line = construction.line
        key = line.parameter_of
    else:
        direction = unit_direction(compute_theta(coeffs, tol))
        p1 = -coeffs.c1 / 2.0
        key = lambda r: (direction.conjugate() * (r - p1)).real
    r1, r2 = sorted((ra, rb), key=key)
    return RootReport(
        r1,
        r2,
        abs(coeffs.evaluate(r1)),
        abs(coeffs.evaluate(r2)),
        construction,
        polished=False,
        fallback=True,
    )


def solve(
    coeffs: QuadraticCoefficients,
    *,
    polish: bool = True,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> RootReport:
    """Locate both roots as the line/circle intersection points.

    Regular inputs yield exactly two intersections, optionally polished by
    at most two Newton steps each (rounding accumulates through the
    argument/cosine/division chain; polishing recovers full precision).
    With polish enabled the result must pass the quality gate or the
    report falls back to the reference solver, flagged; disabling polish
    returns the raw geometric points untouched, for accuracy measurement.
    """
    cls = classify(coeffs, tol)
    if cls is not DegeneracyClass.REGULAR:
        raise DegenerateInput(cls)
    try:
        construction = _construct(coeffs, tol)
    except CollinearPoints:
        return _oracle_fallback(coeffs, None, tol)
    hits = intersect_line_circle(construction.line, construction.circle, tol)
    if len(hits) != 2:
        raise NoIntersection(
            f"expected 2 line/circle intersections for a regular input, got {len(hits)}"
        )
    roots = (hits[0].point, hits[1].point)  # ascending t
    if polish:
        roots = (_newton_polish(roots[0], coeffs), _newton_polish(roots[1], coeffs))
    residuals = (abs(coeffs.evaluate(roots[0])), abs(coeffs.evaluate(roots[1])))
    if polish and not _passes_quality_gate(coeffs, roots, residuals, tol):
        return _oracle_fallback(coeffs, construction, tol)
    return RootReport(
        roots[0],
        roots[1],
        residuals[0],
        residuals[1],
        construction,
        polished=polish,
        fallback=False,
    )


def bisector_direction(p1: complex, w1: complex) -> complex:
    """Unit bisector at p1 of the angle between the rays to 0 and to w1.

    When the two rays are exactly opposite the angle is flat and any
    perpendicular bisects it; both choices agree modulo pi.
    """
    u1 = -p1 / abs(p1)
    arm = w1 - p1
    if arm == 0:
        raise BisectorUndefined("c2/p1 coincides with p1; the second ray has no direction")
    u2 = arm / abs(arm)
    s = u1 + u2
    if abs(s) > BISECTOR_COLLAPSE:
        return s / abs(s)
    return 1j * u1


def theta_via_bisection(
    coeffs: QuadraticCoefficients,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """Line inclination recovered by bisecting the angle 0, p1, c2/p1.

    Agrees with compute_theta modulo pi; an independent route to the same
    line that never touches c1^2/4 - c2.
    """
    cls = classify(coeffs, tol)
    if cls is not DegeneracyClass.REGULAR:
        raise DegenerateInput(cls)
    p1 = -coeffs.c1 / 2.0
    bis = bisector_direction(p1, coeffs.c2 / p1)
    return reduce_mod_pi(argument(bis))
