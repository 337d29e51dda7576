"""Command-line front end.

Subcommands: ``solve`` one equation (table or JSON report), ``figure``
(SVG picture of the construction), ``verify`` (randomized checks of the
geometric propositions) and ``batch`` (solver-vs-reference statistics over
a seeded instance stream).

Exit codes are part of the interface: 0 success, 1 usage or internal
error, 2 degenerate input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

from .cgeom import line_angle_gap
from .config import DEFAULT_TOLERANCES, Tolerances
from .figure import render_figure
from .literals import ComplexParseError, format_complex, parse_complex
from .oracle import match_roots, quadratic_formula
from .properties import (
    MOBIUS_ORIGIN_GAP_BOUND,
    MOBIUS_RADIAL_BOUND,
    SIMILARITY_ANGLE_BOUND,
    SIMILARITY_RATIO_BOUND,
    THETA_AGREEMENT_BOUND,
    instance_seed,
    random_regular_instance,
    verify_mobius_line_to_circle,
    verify_triangle_similarity,
)
from .quadratic import (
    DegeneracyClass,
    DegenerateInput,
    NoIntersection,
    QuadraticCoefficients,
    build_construction,
    classify,
    compute_theta,
    solve,
    theta_via_bisection,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DEGENERATE = 2
EXIT_VERIFY_FAILED = 3

_DEFAULT_MARGIN = 1e-3
_NEAR_DEGENERATE_MARGIN = 1e-9


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments; 2 means "degenerate" here.
    def error(self, message):
        raise _UsageError(message)


def _complex_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _format_dms(theta: float) -> str:
    sign = "-" if theta < 0 else ""
    deg = abs(math.degrees(theta))
    d = int(deg)
    rem = (deg - d) * 60.0
    m = int(rem)
    s = round((rem - m) * 60.0, 3)
    if s >= 60.0:
        s -= 60.0
        m += 1
    if m >= 60:
        m -= 60
        d += 1
    return f'{sign}{d}°{m}\'{s:.3f}"'


def _tolerances(args) -> Tolerances:
    tol = DEFAULT_TOLERANCES
    if args.tol_root is not None:
        tol = replace(tol, root=args.tol_root)
    if args.tol_degenerate is not None:
        tol = replace(tol, degenerate=args.tol_degenerate)
    if args.tol_collinear is not None:
        tol = replace(tol, collinear=args.tol_collinear)
    return tol


def _parse_coefficient(flag: str, text: str) -> complex:
    try:
        return parse_complex(text)
    except ComplexParseError as exc:
        raise _UsageError(f"{flag}: {exc}") from exc


def _solve_report_dict(coeffs, degeneracy, report, oracle_pair, match) -> dict:
    construction = None
    roots = None
    flags = None
    if report is not None:
        if report.construction is not None:
            con = report.construction
            construction = {
                "p1": _complex_json(con.p1),
                "v_d": _complex_json(con.v_d),
                "theta_star": con.theta_star,
                "line": {
                    "fixed_point": _complex_json(con.line.fixed_point),
                    "direction": _complex_json(con.line.direction),
                },
                "w1": _complex_json(con.w1),
                "w2": _complex_json(con.w2),
                "circle": {
                    "center": _complex_json(con.circle.center),
                    "radius": con.circle.radius,
                },
            }
        roots = [
            {"value": _complex_json(report.r1), "residual": report.residual1},
            {"value": _complex_json(report.r2), "residual": report.residual2},
        ]
        flags = {"polished": report.polished, "fallback": report.fallback}
    return {
        "c1": _complex_json(coeffs.c1),
        "c2": _complex_json(coeffs.c2),
        "degeneracy": degeneracy.value,
        "construction": construction,
        "roots": roots,
        "oracle_roots": [_complex_json(oracle_pair[0]), _complex_json(oracle_pair[1])],
        "match": None
        if match is None
        else {"max_abs_error": match.max_abs_error, "max_rel_error": match.max_rel_error},
        "flags": flags,
    }


def _print_solve_table(coeffs, degeneracy, report, oracle_pair, match) -> None:
    def row(key, value):
        print(f"{key:<12}{value}")

    row("equation", f"x^2 + ({format_complex(coeffs.c1)})x + ({format_complex(coeffs.c2)}) = 0")
    row("class", degeneracy.value)
    if report is None:
        row("error", "degenerate input; geometric construction not applicable")
    else:
        if report.construction is not None:
            con = report.construction
            row("theta_star", f"{con.theta_star!r} rad  ({_format_dms(con.theta_star)})")
            row("p1", format_complex(con.p1))
            row("v_d", format_complex(con.v_d))
            row("direction", format_complex(con.line.direction))
            row("w1", format_complex(con.w1))
            row("w2", format_complex(con.w2))
            row(
                "circle",
                f"center {format_complex(con.circle.center)}  radius {con.circle.radius!r}",
            )
        row("r1", f"{format_complex(report.r1)}  residual {report.residual1:.3e}")
        row("r2", f"{format_complex(report.r2)}  residual {report.residual2:.3e}")
    row("oracle", f"{format_complex(oracle_pair[0])}, {format_complex(oracle_pair[1])}")
    if match is not None:
        row("match", f"max_abs_error {match.max_abs_error:.3e}  max_rel_error {match.max_rel_error:.3e}")
    if report is not None:
        row("flags", f"polished={report.polished} fallback={report.fallback}")


def cmd_solve(args) -> int:
    tol = _tolerances(args)
    coeffs = QuadraticCoefficients(
        _parse_coefficient("--c1", args.c1), _parse_coefficient("--c2", args.c2)
    )
    degeneracy = classify(coeffs, tol)
    oracle_pair = quadratic_formula(coeffs)
    if degeneracy is not DegeneracyClass.REGULAR:
        if args.json:
            print(json.dumps(_solve_report_dict(coeffs, degeneracy, None, oracle_pair, None), indent=2))
        else:
            _print_solve_table(coeffs, degeneracy, None, oracle_pair, None)
        return EXIT_DEGENERATE
    report = solve(coeffs, polish=args.polish, tol=tol)
    match = match_roots(report.roots, oracle_pair)
    if args.json:
        print(json.dumps(_solve_report_dict(coeffs, degeneracy, report, oracle_pair, match), indent=2))
    else:
        _print_solve_table(coeffs, degeneracy, report, oracle_pair, match)
    return EXIT_OK


def cmd_figure(args) -> int:
    tol = _tolerances(args)
    coeffs = QuadraticCoefficients(
        _parse_coefficient("--c1", args.c1), _parse_coefficient("--c2", args.c2)
    )
    try:
        report = solve(coeffs, tol=tol)
    except DegenerateInput as exc:
        print(f"cannot draw: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    if report.construction is None:
        print("cannot draw: construction degenerated to the reference solver", file=sys.stderr)
        return EXIT_DEGENERATE
    svg = render_figure(coeffs, report, width=args.width)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise _UsageError("--trials must be >= 1")
    tol = _tolerances(args)
    checks = {
        "mobius_radial": MOBIUS_RADIAL_BOUND,
        "mobius_origin_gap": MOBIUS_ORIGIN_GAP_BOUND,
        "similarity_ratio": SIMILARITY_RATIO_BOUND,
        "similarity_angle": SIMILARITY_ANGLE_BOUND,
        "theta_agreement": THETA_AGREEMENT_BOUND,
    }
    worst = {name: 0.0 for name in checks}
    failures: list[tuple[int, int, str, float]] = []

    for index in range(args.trials):
        seed = instance_seed(args.seed, index)
        coeffs, _ = random_regular_instance(seed, args.scale)
        con = build_construction(coeffs, tol)
        mob = verify_mobius_line_to_circle(coeffs.c2, con.line, sample_count=100, t_max=1e4, tol=tol)
        sim = verify_triangle_similarity(coeffs, tol)
        ratio_err = max(
            abs(r - sim.expected_ratio) for r in (sim.ratio_A, sim.ratio_B, sim.ratio_C)
        ) / sim.expected_ratio
        values = {
            "mobius_radial": mob.max_radial_residual,
            "mobius_origin_gap": mob.origin_gap,
            "similarity_ratio": ratio_err,
            "similarity_angle": abs(sim.angle_left - sim.angle_right),
            "theta_agreement": line_angle_gap(
                theta_via_bisection(coeffs, tol), compute_theta(coeffs, tol)
            ),
        }
        for name, value in values.items():
            worst[name] = max(worst[name], value)
            if value > checks[name]:
                failures.append((index, seed, name, value))

    print(f"verify: seed={args.seed} trials={args.trials} scale={args.scale!r}")
    for name, bound in checks.items():
        print(f"  worst {name:<20} {worst[name]:.3e}  (bound {bound:.0e})")
    if failures:
        for index, seed, name, value in failures:
            print(f"  FAIL trial={index} seed={seed} check={name} value={value:.6e}")
        print("result: FAIL")
        return EXIT_VERIFY_FAILED
    print("result: PASS")
    return EXIT_OK


def _batch_records(task) -> list[tuple[int, int, str, float | None, bool]]:
    seed, start, stop, scale, margin, tol = task
    out = []
    for index in range(start, stop):
        inst = instance_seed(seed, index)
        coeffs, _ = random_regular_instance(inst, scale, margin=margin)
        try:
            report = solve(coeffs, tol=tol)
        except DegenerateInput as exc:
            out.append((index, inst, exc.degeneracy.value, None, False))
            continue
        except NoIntersection:
            out.append((index, inst, "Regular", None, True))
            continue
        match = match_roots(report.roots, quadratic_formula(coeffs))
        out.append((index, inst, "Regular", match.max_rel_error, report.fallback))
    return out


def _batch_stats(args, records) -> dict:
    degenerate = {"DoubleRoot": 0, "ZeroRoot": 0, "LineThroughOrigin": 0}
    regular = fallback = 0
    errors: list[tuple[float, int, int]] = []
    for index, inst, tag, err, flagged in records:
        if tag != "Regular":
            degenerate[tag] += 1
        elif flagged or err is None:
            regular += 1
            fallback += 1
        else:
            regular += 1
            errors.append((err, index, inst))
    errors.sort()
    if errors:
        values = [e for e, _, _ in errors]
        n = len(values)
        median = values[n // 2] if n % 2 else (values[n // 2 - 1] + values[n // 2]) / 2.0
        p99 = values[min(n - 1, math.ceil(0.99 * n) - 1)]
        err_stats = {"max": values[-1], "median": median, "p99": p99}
        worst_seed, worst_index = errors[-1][2], errors[-1][1]
    else:
        err_stats = {"max": 0.0, "median": 0.0, "p99": 0.0}
        worst_seed = worst_index = None
    return {
        "seed": args.seed,
        "trials": args.trials,
        "scale": args.scale,
        "near_degenerate": bool(args.near_degenerate),
        "regular_count": regular,
        "degenerate_count": degenerate,
        "fallback_count": fallback,
        "max_rel_error": err_stats,
        "worst_seed": worst_seed,
        "worst_index": worst_index,
    }


def cmd_batch(args) -> int:
    if args.trials < 1:
        raise _UsageError("--trials must be >= 1")
    workers = args.workers if args.workers else (os.cpu_count() or 1)
    if workers < 1:
        raise _UsageError("--workers must be >= 1")
    tol = _tolerances(args)
    margin = _NEAR_DEGENERATE_MARGIN if args.near_degenerate else _DEFAULT_MARGIN

    # Work is partitioned by index, so any worker count yields the same bytes.
    records: list[tuple[int, int, str, float | None, bool]] = []
    if workers == 1 or args.trials < 2 * workers:
        records = _batch_records((args.seed, 0, args.trials, args.scale, margin, tol))
    else:
        chunk = math.ceil(args.trials / workers)
        tasks = [
            (args.seed, lo, min(lo + chunk, args.trials), args.scale, margin, tol)
            for lo in range(0, args.trials, chunk)
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_batch_records, tasks):
                records.extend(part)

    text = json.dumps(_batch_stats(args, records), indent=2)
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="lcroots", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-root", type=float, default=None, help="root residual tolerance (default 1e-9)")
    common.add_argument("--tol-degenerate", type=float, default=None, help="degeneracy threshold (default 1e-12)")
    common.add_argument("--tol-collinear", type=float, default=None, help="collinearity threshold (default 1e-12)")

    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", parents=[common], help="solve one equation")
    p_solve.add_argument("--c1", required=True, help="linear coefficient, e.g. '-1-7i'")
    p_solve.add_argument("--c2", required=True, help="constant coefficient, e.g. '-18+1i'")
    p_solve.add_argument("--json", action="store_true", help="emit a JSON report")
    p_solve.add_argument(
        "--polish",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="Newton-polish the geometric intersections (default on)",
    )
    p_solve.set_defaults(func=cmd_solve)

    p_figure = sub.add_parser("figure", parents=[common], help="render the construction as SVG")
    p_figure.add_argument("--c1", required=True)
    p_figure.add_argument("--c2", required=True)
    p_figure.add_argument("--out", required=True, help="output SVG path")
    p_figure.add_argument("--width", type=int, default=800, help="image width in pixels")
    p_figure.set_defaults(func=cmd_figure)

    p_verify = sub.add_parser("verify", parents=[common], help="run the geometric property checks")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--trials", type=int, default=1000)
    p_verify.add_argument("--scale", type=float, default=10.0)
    p_verify.set_defaults(func=cmd_verify)

    p_batch = sub.add_parser("batch", parents=[common], help="solver-vs-reference statistics")
    p_batch.add_argument("--seed", type=int, default=42)
    p_batch.add_argument("--trials", type=int, default=10000)
    p_batch.add_argument("--scale", type=float, default=10.0)
    p_batch.add_argument("--near-degenerate", action="store_true", help="shrink generator margins to stress the classifier")
    p_batch.add_argument("--out", default=None, help="also write the statistics JSON to this path")
    p_batch.add_argument("--workers", type=int, default=None, help="parallel workers (default: all cores)")
    p_batch.set_defaults(func=cmd_batch)
    return parser


_VALUE_FLAGS = {"--c1", "--c2"}


def _join_value_flags(argv: list[str]) -> list[str]:
    # Complex literals usually start with '-', which argparse would read as
    # an option; rewrite "--c1 -1-7i" into "--c1=-1-7i" before parsing.
    out = []
    i = 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_join_value_flags(list(argv)))
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
