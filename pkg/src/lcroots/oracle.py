"""Reference quadratic solver and a permutation-aware root matcher.

This is the ground truth the geometric path is validated against, so it
must be at least as accurate as the code it checks: the solver always
computes the larger-magnitude root first and derives the other one by
division, avoiding subtractive cancellation.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .quadratic import QuadraticCoefficients


def quadratic_formula(coeffs: "QuadraticCoefficients") -> tuple[complex, complex]:
    """Both roots of x^2 + c1*x + c2 = 0, cancellation-free.

    Uses the principal complex square root (range in the right half-plane,
    with the negative real axis mapping onto the positive imaginary axis),
    picks the sign that maximizes |c1 + sign*d|, and derives the small root
    as c2/q. Total: returns (0, 0) when both roots vanish.
    """
    c1, c2 = coeffs.c1, coeffs.c2
    d = cmath.sqrt(c1 * c1 - 4.0 * c2)
    if abs(c1 + d) >= abs(c1 - d):
        q = -(c1 + d) / 2.0
    else:
        q = -(c1 - d) / 2.0
    if q == 0:
        return (0j, 0j)
    return (q, c2 / q)


@dataclass(frozen=True)
class MatchResult:
    """Best assignment between two root pairs.

    ``pairing`` holds, for each element of the first pair, the index of the
    second-pair element it was matched to.
    """

    pairing: tuple[int, int]
    max_abs_error: float
    max_rel_error: float


def match_roots(a: tuple[complex, complex], b: tuple[complex, complex]) -> MatchResult:
    """Match the pair ``a`` against ``b``, minimizing the worst deviation.

    Both possible assignments are evaluated; the relative error is scaled
    by max(|b1|, |b2|, 1).
    """
    direct = max(abs(a[0] - b[0]), abs(a[1] - b[1]))
    crossed = max(abs(a[0] - b[1]), abs(a[1] - b[0]))
    if direct <= crossed:
        pairing, err = (0, 1), direct
    else:
        pairing, err = (1, 0), crossed
    scale = max(abs(b[0]), abs(b[1]), 1.0)
    return MatchResult(pairing, err, err / scale)
