"""Invariant suite behind ``ellipse-perimeter check``.

Each check returns a :class:`CheckOutcome`; failures name the offending
input.  ``quick=True`` trims the grids so the whole suite runs well under a
second.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

from . import approximations, bounds, elliptic, quadrature, series
from .geometry import canonicalize

SANDWICH_SEED = 20240917


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    cases: int
    detail: str


def log_grid(lo_exp: float, hi_exp: float, n: int) -> list[float]:
    return [10.0 ** (lo_exp + (hi_exp - lo_exp) * i / (n - 1)) for i in range(n)]


def random_axes(n: int, seed: int = SANDWICH_SEED) -> list[tuple[float, float]]:
    """Scale log-uniform in [1e-3, 1e3]; b/a uniform on half the draws, log-uniform down to 1e-8 on the rest."""
    rng = random.Random(seed)
    out = []
    for i in range(n):
        a = 10.0 ** rng.uniform(-3.0, 3.0)
        ratio = rng.random() if i % 2 == 0 else 10.0 ** rng.uniform(-8.0, 0.0)
        out.append((a, a * ratio))
    return out


def check_cross_oracle(quick: bool = False, tol: float = 1e-10) -> CheckOutcome:
    grid = log_grid(-6.0, 0.0, 8 if quick else 50)
    worst, worst_at = 0.0, None
    for ratio in grid:
        axes = canonicalize(1.0, ratio)
        agm = elliptic.perimeter_agm(axes)
        dev = abs(agm - quadrature.perimeter_quadrature(axes)) / agm
        if dev > worst:
            worst, worst_at = dev, ratio
    ok = worst <= tol
    detail = f"max rel deviation {worst:.3e}" + ("" if ok else f" at b/a={worst_at!r}")
    return CheckOutcome("cross-oracle agm vs quadrature", ok, len(grid), detail)


def check_sandwich(quick: bool = False, slack: float = 1e-9, perturb: float = 0.0) -> CheckOutcome:
    """lower_geometric <= lower_arithmetic <= oracle <= upper_log <= upper_linear.

    ``perturb`` shrinks upper_log by that relative amount; it exists so the
    harness can prove it notices a broken bound.
    """
    samples = random_axes(100 if quick else 1000)
    for a, b in samples:
        axes = canonicalize(a, b)
        oracle = elliptic.perimeter_agm(axes)
        chain = [
            ("lower_geometric", bounds.lower_geometric(axes)),
            ("lower_arithmetic", bounds.lower_arithmetic(axes)),
            ("oracle", oracle),
            ("upper_log", bounds.upper_log(axes) * (1.0 - perturb)),
            ("upper_linear", bounds.upper_linear(axes)),
        ]
        for (lname, lo), (hname, hi) in zip(chain, chain[1:]):
            if lo > hi * (1.0 + slack):
                return CheckOutcome(
                    "sandwich bounds", False, len(samples), f"{lname} > {hname} at a={a!r}, b={b!r}"
                )
    return CheckOutcome("sandwich bounds", True, len(samples), "no violations")


LANDEN_POINTS = (-0.99, -0.5, 0.0, 1.0, 10.0, 1e4)


def check_landen(quick: bool = False, tol: float = 1e-10) -> CheckOutcome:
    worst = max(elliptic.landen_residual(t) for t in LANDEN_POINTS)
    return CheckOutcome("landen identity", worst <= tol, len(LANDEN_POINTS), f"max residual {worst:.3e}")


def check_asymptote(quick: bool = False) -> CheckOutcome:
    points = [1e6, 1e8, 1e12] if quick else [10.0**k for k in range(6, 13)]
    for t in points:
        ratio = elliptic.F_closed(t) / elliptic.F_asymptotic(t)
        if not 1.0 <= ratio <= 1.0 + 1e-4:
            return CheckOutcome("asymptote 2/pi sqrt(t)", False, len(points), f"ratio {ratio!r} at t={t!r}")
    return CheckOutcome("asymptote 2/pi sqrt(t)", True, len(points), "ratio within [1, 1+1e-4]")


def xi_grid(quick: bool = False) -> list[float]:
    step = 0.1 if quick else 0.02
    n = int(round(0.98 / step))
    return [0.01 + step * i for i in range(n)] + [0.99]


def check_closed_forms(quick: bool = False, tol: float = 1e-10) -> CheckOutcome:
    grid = xi_grid(quick)
    worst, worst_at = 0.0, None
    for xi in grid:
        dev = max(
            abs(bounds.J_closed(xi) - quadrature.J_numeric(xi)),
            abs(bounds.K_closed(xi) - quadrature.K_numeric(xi)),
        )
        if dev > worst:
            worst, worst_at = dev, xi
    ok = worst <= tol
    detail = f"max abs deviation {worst:.3e}" + ("" if ok else f" at xi={worst_at!r}")
    return CheckOutcome("J/K closed vs numeric", ok, len(grid), detail)


def check_decomposition(quick: bool = False, tol: float = 1e-12) -> CheckOutcome:
    grid = xi_grid(quick)
    worst = 0.0
    for xi in grid:
        rhs = xi * 0.5 * math.pi - 1.0 + (1.0 - xi * xi) * bounds.J_closed(xi)
        worst = max(worst, abs(bounds.K_closed(xi) - rhs))
    return CheckOutcome("K = xi pi/2 - 1 + (1-xi^2) J", worst <= tol, len(grid), f"max deviation {worst:.3e}")


SERIES_POINTS = ((2.0, 1.0), (1.0, 0.5), (1.5, 1.4))


def check_series(quick: bool = False, tol: float = 1e-9) -> CheckOutcome:
    points = SERIES_POINTS if quick else SERIES_POINTS + ((1.0, 0.3), (3.0, 2.9), (1.0, 0.8))
    cases = 0
    for a, b in points:
        axes = canonicalize(a, b)
        oracle = elliptic.perimeter_agm(axes)
        mac = series.maclaurin_perimeter(axes)
        gk = series.gauss_kummer_perimeter(axes)
        values = {
            "maclaurin": mac.value,
            "gauss-kummer": gk.value,
            "euler-2f1": series.euler_2f1_perimeter(axes).value,
            "abbott": series.abbott_perimeter(axes),
        }
        if axes.b / axes.a >= 0.3:
            values["euler-maclaurin"] = series.euler_maclaurin_perimeter(axes).value
        for name, value in values.items():
            cases += 1
            if abs(value - oracle) > tol * oracle:
                return CheckOutcome("series vs oracle", False, cases, f"{name} off at a={a}, b={b}")
        if a != b and not gk.terms_used < mac.terms_used:
            return CheckOutcome("series vs oracle", False, cases, f"gauss-kummer not faster at a={a}, b={b}")
    return CheckOutcome("series vs oracle", True, cases, "all representations agree")


def check_cayley(quick: bool = False) -> CheckOutcome:
    axes = canonicalize(1.0, 0.1)
    oracle = elliptic.perimeter_agm(axes)
    if abs(series.cayley_perimeter(axes, 6) - oracle) > 1e-6 * oracle:
        return CheckOutcome("cayley truncation", False, 4, "order 6 off at (1, 0.1)")
    axes = canonicalize(1.0, 0.01)
    oracle = elliptic.perimeter_agm(axes)
    errs = [abs(series.cayley_perimeter(axes, k) - oracle) for k in (2, 4, 6)]
    ok = errs[0] > errs[1] > errs[2]
    return CheckOutcome("cayley truncation", ok, 4, "errors by order " + ", ".join(f"{e:.2e}" for e in errs))


def check_circle(quick: bool = False, tol: float = 1e-12) -> CheckOutcome:
    radii = (1.0,) if quick else (1.0, 1e-3, 7.5, 1e4)
    for r in radii:
        axes = canonicalize(r, r)
        exact = 2.0 * math.pi * r
        if abs(bounds.upper_log(axes) - exact) > tol * exact:
            return CheckOutcome("endpoint exactness", False, len(radii), f"upper_log at circle r={r}")
        for ident in approximations.ApproximationId:
            if abs(approximations.approximate(ident, axes) - exact) > tol * exact:
                return CheckOutcome("endpoint exactness", False, len(radii), f"{ident.value} at circle r={r}")
        seg = canonicalize(r, 0.0)
        if abs(bounds.upper_log(seg) - 4.0 * r) > tol * 4.0 * r:
            return CheckOutcome("endpoint exactness", False, len(radii), f"upper_log at segment a={r}")
    return CheckOutcome("endpoint exactness", True, len(radii), "circle and segment exact")


def check_sweep(quick: bool = False) -> CheckOutcome:
    from .sweep import sweep_rows

    rows = sweep_rows(2.0, 0.01, 2.0, 20 if quick else 200)
    for row in rows:
        if row.f2 > row.f1 * (1.0 + 1e-12) or row.oracle > row.f2 * (1.0 + 1e-12):
            return CheckOutcome("sweep f2 <= f1", False, len(rows), f"ordering broken at b={row.b!r}")
    return CheckOutcome("sweep f2 <= f1", True, len(rows), "quarter oracle <= f2 <= f1")


CHECKS: tuple[Callable[..., CheckOutcome], ...] = (
    check_cross_oracle,
    check_sandwich,
    check_landen,
    check_asymptote,
    check_closed_forms,
    check_decomposition,
    check_series,
    check_cayley,
    check_circle,
    check_sweep,
)


def run_checks(quick: bool = False, perturb: float = 0.0) -> list[CheckOutcome]:
    outcomes = []
    for check in CHECKS:
        if check is check_sandwich:
            outcomes.append(check(quick=quick, perturb=perturb))
        else:
            outcomes.append(check(quick=quick))
    return outcomes
