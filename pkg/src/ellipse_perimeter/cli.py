"""Command-line front end.

Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import __version__, approximations, bounds, checks, elliptic, quadrature, series
from .errors import ConvergenceError, DomainError, NonFiniteError
from .geometry import canonicalize
from .sweep import SWEEP_COLUMNS, sweep_rows

SERIES_METHODS = ("euler-maclaurin", "maclaurin", "gauss-kummer", "euler-2f1")
METHODS = ("agm", "quadrature") + SERIES_METHODS + ("cayley", "abbott") + approximations.APPROXIMATION_NAMES


@dataclass
class Document:
    columns: list[str]
    rows: list[dict]
    meta: dict = field(default_factory=dict)


def _cell(value, digits: int) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, f".{digits}g")
    return str(value)


def render(doc: Document, fmt: str) -> str:
    if fmt == "json":
        payload = {"meta": doc.meta, "rows": [{c: row.get(c) for c in doc.columns} for row in doc.rows]}
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(doc.columns)
        for row in doc.rows:
            writer.writerow([_cell(row.get(c), 17) for c in doc.columns])
        return buf.getvalue()
    cells = [[_cell(row.get(c), 12) for c in doc.columns] for row in doc.rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(doc.columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(doc.columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in cells)
    return "\n".join(lines) + "\n"


def _specs(args) -> tuple[quadrature.QuadratureSpec, elliptic.AgmSpec]:
    if args.tol is None:
        return quadrature.DEFAULT_SPEC, elliptic.DEFAULT_AGM
    return quadrature.QuadratureSpec(abs_tol=args.tol, rel_tol=args.tol), elliptic.AgmSpec(tol=args.tol)


def _meta(args, command: str, **extra) -> dict:
    qspec, aspec = _specs(args)
    meta = {
        "version": __version__,
        "command": command,
        "quad_abs_tol": qspec.abs_tol,
        "quad_rel_tol": qspec.rel_tol,
        "agm_tol": aspec.tol,
    }
    meta.update(extra)
    return meta


def cmd_perimeter(args) -> Document:
    axes = canonicalize(args.a, args.b)
    qspec, aspec = _specs(args)
    method = args.method
    terms_used = converged = None
    if method == "agm":
        value = elliptic.perimeter_agm(axes, aspec)
    elif method == "quadrature":
        value = quadrature.perimeter_quadrature(axes, qspec)
    elif method in SERIES_METHODS:
        fn = {
            "euler-maclaurin": series.euler_maclaurin_perimeter,
            "maclaurin": series.maclaurin_perimeter,
            "gauss-kummer": series.gauss_kummer_perimeter,
            "euler-2f1": series.euler_2f1_perimeter,
        }[method]
        result = fn(axes)
        value, terms_used, converged = result.value, result.terms_used, result.converged
    elif method == "cayley":
        value = series.cayley_perimeter(axes, args.order)
    elif method == "abbott":
        value = series.abbott_perimeter(axes, qspec)
    else:
        value = approximations.approximate(method, axes, as_printed=args.as_printed)
    row = {"method": method, "a": axes.a, "b": axes.b, "value": value,
           "terms_used": terms_used, "converged": converged}
    columns = ["method", "a", "b", "value"]
    if method in SERIES_METHODS:
        columns += ["terms_used", "converged"]
    return Document(columns, [row], _meta(args, "perimeter"))


def cmd_bounds(args) -> Document:
    axes = canonicalize(args.a, args.b)
    _, aspec = _specs(args)
    bracket = bounds.bound_bracket(axes)
    oracle = elliptic.perimeter_agm(axes, aspec)
    rows = [
        {"quantity": "lower_geometric", "value": bracket.lower_geometric},
        {"quantity": "lower_arithmetic", "value": bracket.lower_arithmetic},
        {"quantity": "oracle", "value": oracle},
        {"quantity": "upper_log", "value": bracket.upper_log},
        {"quantity": "upper_linear", "value": bracket.upper_linear},
        {"quantity": "certified_lower", "value": bracket.certified_lower},
        {"quantity": "certified_upper", "value": bracket.certified_upper},
        {"quantity": "margin_below", "value": oracle - bracket.certified_lower},
        {"quantity": "margin_above", "value": bracket.certified_upper - oracle},
    ]
    meta = _meta(args, "bounds", a=axes.a, b=axes.b, oracle_in_bracket=bracket.contains(oracle, 1e-12))
    return Document(["quantity", "value"], rows, meta)


def cmd_compare(args) -> Document:
    axes = canonicalize(args.a, args.b)
    _, aspec = _specs(args)
    oracle = elliptic.perimeter_agm(axes, aspec)
    reports = approximations.report_all(axes, oracle, as_printed=args.as_printed)
    rows = [
        {"rank": i + 1, "id": r.id.value, "value": r.value, "abs_error": r.abs_error, "rel_error": r.rel_error}
        for i, r in enumerate(reports)
    ]
    meta = _meta(args, "compare", a=axes.a, b=axes.b, oracle=oracle, as_printed=args.as_printed)
    return Document(["rank", "id", "value", "abs_error", "rel_error"], rows, meta)


def cmd_sweep(args) -> Document:
    b_max = args.a if args.b_max is None else args.b_max
    rows = [vars(r) for r in sweep_rows(args.a, args.b_min, b_max, args.steps)]
    meta = _meta(args, "sweep", a=args.a, b_min=args.b_min, b_max=b_max, steps=args.steps)
    return Document(list(SWEEP_COLUMNS), rows, meta)


def cmd_check(args) -> Document:
    outcomes = checks.run_checks(quick=args.quick, perturb=args.inject_fault)
    rows = [{"property": o.name, "passed": o.passed, "cases": o.cases, "detail": o.detail} for o in outcomes]
    meta = _meta(args, "check", quick=args.quick, all_passed=all(o.passed for o in outcomes))
    return Document(["property", "passed", "cases", "detail"], rows, meta)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellipse-perimeter",
        description="Ellipse perimeter reference values, bounds and approximations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--tol", type=float, default=None,
                        help="override reference tolerance (quadrature abs/rel and AGM)")
    axes = argparse.ArgumentParser(add_help=False)
    axes.add_argument("--a", type=float, required=True, help="first semi-axis")
    axes.add_argument("--b", type=float, required=True, help="second semi-axis")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("perimeter", parents=[common, axes], help="perimeter by one method")
    p.add_argument("--method", choices=METHODS, default="agm")
    p.add_argument("--order", type=int, choices=(2, 4, 6), default=6, help="cayley truncation order")
    p.add_argument("--as-printed", action="store_true", help="use printed sipos/ramanujan2 variants")
    p.set_defaults(func=cmd_perimeter)

    p = sub.add_parser("bounds", parents=[common, axes], help="certified bracket and reference value")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("compare", parents=[common, axes], help="rank approximations against the reference")
    p.add_argument("--as-printed", action="store_true", help="use printed sipos/ramanujan2 variants")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sweep", parents=[common], help="quarter-arc upper bounds along b")
    p.add_argument("--a", type=float, default=2.0)
    p.add_argument("--b-min", type=float, default=0.01)
    p.add_argument("--b-max", type=float, default=None, help="defaults to a")
    p.add_argument("--steps", type=int, default=200)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("check", parents=[common], help="run the invariant suite")
    p.add_argument("--quick", action="store_true", help="reduced grids")
    p.add_argument("--inject-fault", type=float, default=0.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = args.func(args)
    except (DomainError, ConvergenceError, NonFiniteError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render(doc, args.format))
    if args.command == "check" and not doc.meta["all_passed"]:
        return 1
    return 0
