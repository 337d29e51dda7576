"""Shared numeric tolerances."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Tolerance record threaded through every numeric routine.

    root: relative bound on accepted root residuals and Vieta checks.
    degenerate: relative threshold classifying degenerate coefficient sets.
    collinear: relative determinant threshold for the origin-circle fit.
    tangency: relative slack for near-tangent line/circle intersections.
    """

    root: float = 1e-9
    degenerate: float = 1e-12
    collinear: float = 1e-12
    tangency: float = 1e-12


DEFAULT_TOLERANCES = Tolerances()
