"""Plane geometry on complex numbers.

Points and vectors are plain ``complex`` values. This module provides the
primitives the quadratic construction is assembled from: principal
arguments, unit direction vectors, circles through the origin fitted from
two further points, and a robust line/circle intersection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .config import DEFAULT_TOLERANCES, Tolerances


class ZeroArgument(ValueError):
    """The argument of 0 was requested."""


class CollinearPoints(ValueError):
    """A circle fit degenerated: the origin and both sample points are collinear."""


def require_finite(z: complex, name: str = "value") -> complex:
    """Reject NaN/infinite components before they enter any geometry."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must have finite components, got {z!r}")
    return z


def argument(z: complex) -> float:
    """Principal argument of ``z`` in (-pi, pi].

    Raises ZeroArgument for z = 0; callers are expected to guard near-zero
    inputs with their own thresholds.
    """
    if z == 0:
        raise ZeroArgument("argument of 0 is undefined")
    a = math.atan2(z.imag, z.real)
    # atan2 returns -pi for a negative real with im == -0.0; fold onto +pi
    # so the branch is exactly (-pi, pi].
    if a == -math.pi:
        return math.pi
    return a


def unit_direction(theta: float) -> complex:
    """Unit vector cos(theta) + i*sin(theta)."""
    if not math.isfinite(theta):
        raise ValueError(f"theta must be finite, got {theta!r}")
    return complex(math.cos(theta), math.sin(theta))


def reduce_mod_pi(angle: float) -> float:
    """Reduce an angle modulo pi into (-pi/2, pi/2].

    Line inclinations are directions modulo pi: both half-line choices
    describe the same trajectory.
    """
    a = math.fmod(angle, math.pi)
    if a <= -math.pi / 2:
        a += math.pi
    elif a > math.pi / 2:
        a -= math.pi
    return a


def line_angle_gap(a: float, b: float) -> float:
    """Distance between two line inclinations, measured modulo pi."""
    d = math.fmod(abs(a - b), math.pi)
    return min(d, math.pi - d)


@dataclass(frozen=True)
class ParametricLine:
    """Line traced by ``fixed_point + t * direction`` for real t.

    ``direction`` must be a unit vector; the parameter t is then arc length
    along the trajectory.
    """

    fixed_point: complex
    direction: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "fixed_point", require_finite(self.fixed_point, "fixed_point"))
        object.__setattr__(self, "direction", require_finite(self.direction, "direction"))
        if abs(abs(self.direction) - 1.0) > 1e-12:
            raise ValueError(f"direction must be a unit vector, got {self.direction!r}")

    def point_at(self, t: float) -> complex:
        return self.fixed_point + t * self.direction

    def parameter_of(self, z: complex) -> float:
        """Parameter of the orthogonal projection of ``z`` onto the line."""
        return (self.direction.conjugate() * (z - self.fixed_point)).real

    def distance_to(self, z: complex) -> float:
        """Euclidean distance from ``z`` to the trajectory."""
        return abs((self.direction.conjugate() * (z - self.fixed_point)).imag)


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", require_finite(self.center, "center"))
        object.__setattr__(self, "radius", float(self.radius))
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"radius must be positive and finite, got {self.radius!r}")

    def radial_residual(self, z: complex) -> float:
        """Relative deviation of ``z`` from the circle."""
        return abs(abs(z - self.center) - self.radius) / self.radius


def circle_through_origin(
    w1: complex,
    w2: complex,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Circle:
    """Circle through 0, ``w1`` and ``w2``.

    Subtracting the origin's distance equation from the other two leaves a
    2x2 linear system for the center; the radius is then |center| because
    the circle passes through 0. The determinant test is scaled by
    |w1|*|w2| so the collinearity decision is scale invariant; a failure
    means the three points sit on one line through the origin.
    """
    w1 = require_finite(w1, "w1")
    w2 = require_finite(w2, "w2")
    x1, y1 = w1.real, w1.imag
    x2, y2 = w2.real, w2.imag
    det = x1 * y2 - x2 * y1
    if abs(det) <= tol.collinear * abs(w1) * abs(w2):
        raise CollinearPoints(
            f"0, {w1!r} and {w2!r} are collinear; no circle through all three"
        )
    q1 = x1 * x1 + y1 * y1
    q2 = x2 * x2 + y2 * y2
    h = (-y1 * q2 + y2 * q1) / (2.0 * det)
    k = (x1 * q2 - x2 * q1) / (2.0 * det)
    center = complex(h, k)
    return Circle(center, abs(center))


class Intersection(NamedTuple):
    point: complex
    t: float


def intersect_line_circle(
    line: ParametricLine,
    circle: Circle,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> list[Intersection]:
    """Intersect a line with a circle; returns 0, 1 or 2 points with parameters.

    Drops a perpendicular from the center onto the line (parameter t0), then
    walks half the chord in both directions. Near tangency the half-chord is
    clamped at zero instead of failing, and chords shorter than
    ``tol.tangency * radius`` collapse to the single foot point, which keeps
    behaviour graceful under rounding near double intersections. Results are
    ordered by ascending t.
    """
    v = line.direction
    t0 = (v.conjugate() * (circle.center - line.fixed_point)).real
    foot = line.point_at(t0)
    d = abs(circle.center - foot)
    r = circle.radius
    if d > r * (1.0 + tol.tangency):
        return []
    gap = r * r - d * d
    h = math.sqrt(gap) if gap > 0.0 else 0.0
    if h <= tol.tangency * r:
        return [Intersection(foot, t0)]
    return [
        Intersection(line.point_at(t0 - h), t0 - h),
        Intersection(line.point_at(t0 + h), t0 + h),
    ]
