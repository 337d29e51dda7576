"""Deterministic SVG rendering of a solved construction.

Plain text SVG 1.1 is emitted directly (no plotting library), so output is
byte-stable and golden-testable. The root element carries data-x-min,
data-y-max and data-scale attributes describing the affine plane-to-pixel
map: px = (x - xmin) * scale, py = (ymax - y) * scale, equal scale on both
axes with y pointing up.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .literals import format_complex
from .quadratic import QuadraticCoefficients, RootReport

PAD_FRACTION = 0.10
MARKER_RADIUS = 3.0

# Extend the drawn chord this many chord lengths past each intersection.
_LINE_OVERHANG = 2.0

_MARKER_IDS = {
    "0": "origin",
    "p1": "p1",
    "c2/p1": "c2-over-p1",
    "r1": "r1",
    "r2": "r2",
    "center": "center",
}


def render_figure(coeffs: QuadraticCoefficients, report: RootReport, width: int = 800) -> str:
    """SVG picture of axes, the root line, the image circle and labelled points."""
    if report.construction is None:
        raise ValueError("report carries no construction to draw")
    if width <= 0:
        raise ValueError(f"width must be positive, got {width}")
    con = report.construction
    circle = con.circle

    marks: dict[str, complex] = {
        "0": 0j,
        "p1": con.p1,
        "c2/p1": con.w1,
        "r1": report.r1,
        "r2": report.r2,
        "center": circle.center,
    }

    xs = [z.real for z in marks.values()]
    ys = [z.imag for z in marks.values()]
    xs += [circle.center.real - circle.radius, circle.center.real + circle.radius]
    ys += [circle.center.imag - circle.radius, circle.center.imag + circle.radius]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    pad_x = PAD_FRACTION * (xmax - xmin)  # spans are positive: radius > 0
    pad_y = PAD_FRACTION * (ymax - ymin)
    xmin -= pad_x
    xmax += pad_x
    ymin -= pad_y
    ymax += pad_y

    scale = width / (xmax - xmin)
    height = max(1, math.ceil((ymax - ymin) * scale))

    def px(z: complex) -> tuple[float, float]:
        return ((z.real - xmin) * scale, (ymax - z.imag) * scale)

    t1 = con.line.parameter_of(report.r1)
    t2 = con.line.parameter_of(report.r2)
    t_lo, t_hi = min(t1, t2), max(t1, t2)
    overhang = _LINE_OVERHANG * (t_hi - t_lo)
    seg_a = px(con.line.point_at(t_lo - overhang))
    seg_b = px(con.line.point_at(t_hi + overhang))

    ox, oy = px(0j)
    ccx, ccy = px(circle.center)
    equation = f"x^2 + ({format_complex(coeffs.c1)})x + ({format_complex(coeffs.c2)}) = 0"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}" '
        f'data-x-min="{xmin!r}" data-y-max="{ymax!r}" data-scale="{scale!r}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<line id="axis-x" x1="0" y1="{oy!r}" x2="{width}" y2="{oy!r}" '
        f'stroke="#bbbbbb" stroke-width="1"/>',
        f'<line id="axis-y" x1="{ox!r}" y1="0" x2="{ox!r}" y2="{height}" '
        f'stroke="#bbbbbb" stroke-width="1"/>',
        f'<circle id="curve-circle" cx="{ccx!r}" cy="{ccy!r}" '
        f'r="{circle.radius * scale!r}" fill="none" stroke="#1f77b4" stroke-width="1.5"/>',
        f'<line id="curve-line" x1="{seg_a[0]!r}" y1="{seg_a[1]!r}" '
        f'x2="{seg_b[0]!r}" y2="{seg_b[1]!r}" stroke="#d62728" stroke-width="1.5"/>',
    ]
    for label, z in marks.items():
        mx, my = px(z)
        parts.append(
            f'<g id="marker-{_MARKER_IDS[label]}" class="marker">'
            f'<circle cx="{mx!r}" cy="{my!r}" r="{MARKER_RADIUS}" fill="#222222"/>'
            f'<text x="{mx + 5.0!r}" y="{my - 5.0!r}" font-size="12" '
            f'font-family="sans-serif">{escape(label)}</text></g>'
        )
    parts.append(
        f'<text id="legend" x="10" y="18" font-size="13" '
        f'font-family="sans-serif">{escape(equation)}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
