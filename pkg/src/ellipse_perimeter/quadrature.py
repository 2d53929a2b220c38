"""Adaptive Gauss-Kronrod quadrature used as the numeric reference for every closed form.

The integrator bisects the panel with the largest error estimate until the
summed estimate meets ``max(abs_tol, rel_tol * |value|)``.  Each panel is
integrated with the 15-point Kronrod rule; the embedded 7-point Gauss rule
supplies the error estimate.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import BudgetExhaustedError, DomainError, NonFiniteError
from .geometry import EllipseAxes

HALF_PI = 0.5 * math.pi

# Kronrod abscissae on [0, 1]; odd indices are the Gauss-7 nodes.
_XK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

# Hard cap on live panels, independent of depth.
_MAX_PANELS = 20000


@dataclass(frozen=True)
class QuadratureSpec:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_depth: int = 60

    def __post_init__(self):
        if not self.abs_tol > 0.0:
            raise ValueError("abs_tol must be positive")
        if not self.rel_tol >= 0.0:
            raise ValueError("rel_tol must be non-negative")
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    err_estimate: float
    evaluations: int


DEFAULT_SPEC = QuadratureSpec()


def _gk15(f: Callable[[float], float], lo: float, hi: float) -> tuple[float, float]:
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    fc = f(center)
    kronrod = _WK[7] * fc
    gauss = _WG[3] * fc
    for j in range(7):
        dx = half * _XK[j]
        fsum = f(center - dx) + f(center + dx)
        kronrod += _WK[j] * fsum
        if j % 2 == 1:
            gauss += _WG[j // 2] * fsum
    kronrod *= half
    gauss *= half
    if not (math.isfinite(kronrod) and math.isfinite(gauss)):
        raise NonFiniteError(f"integrand is not finite on [{lo!r}, {hi!r}]")
    return kronrod, abs(kronrod - gauss)


def graded_points(origin: float, scale: float, length: float, ratio: float = 4.0) -> list[float]:
    """Breakpoints ``origin + scale * ratio**k`` that stay within ``length`` of ``origin``.

    A negative ``scale`` grades toward ``origin`` from below.  Features of width
    ``|scale|`` at an endpoint are invisible to a single wide panel; seeding
    the panel list with these points lets the error estimate see them.
    """
    pts = []
    step = abs(scale)
    while 0.0 < step < length:
        pts.append(origin + math.copysign(step, scale))
        step *= ratio
    return pts


def integrate(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    points: Sequence[float] = (),
) -> QuadratureResult:
    """Integrate ``f`` over ``[lo, hi]`` by globally adaptive bisection.

    ``points`` are optional interior breakpoints used to seed the panel list.

    Raises
    ------
    BudgetExhaustedError
        A panel needing refinement is already ``spec.max_depth`` bisections deep,
        or the panel count grew past the internal cap.
    NonFiniteError
        ``f`` returned inf or nan somewhere it was sampled.
    """
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo!r}, {hi!r}]")

    edges = [lo] + sorted(x for x in set(points) if lo < x < hi) + [hi]
    # max-heap on error via negation; the counter keeps ordering deterministic
    heap = []
    for counter, (p_lo, p_hi) in enumerate(zip(edges, edges[1:])):
        v, e = _gk15(f, p_lo, p_hi)
        heap.append((-e, counter, p_lo, p_hi, v, e, 0))
    heapq.heapify(heap)
    counter = len(heap)
    evaluations = 15 * counter
    value = math.fsum(item[4] for item in heap)
    err = math.fsum(item[5] for item in heap)
    while True:
        target = max(spec.abs_tol, spec.rel_tol * abs(value))
        if err <= target:
            break
        _, _, p_lo, p_hi, p_val, p_err, depth = heapq.heappop(heap)
        if depth >= spec.max_depth or len(heap) >= _MAX_PANELS:
            raise BudgetExhaustedError(
                f"quadrature budget exhausted on [{p_lo!r}, {p_hi!r}] "
                f"(depth {depth}, error estimate {err:.3e} > {target:.3e})"
            )
        mid = 0.5 * (p_lo + p_hi)
        v1, e1 = _gk15(f, p_lo, mid)
        v2, e2 = _gk15(f, mid, p_hi)
        evaluations += 30
        value += v1 + v2 - p_val
        err += e1 + e2 - p_err
        heapq.heappush(heap, (-e1, counter, p_lo, mid, v1, e1, depth + 1))
        heapq.heappush(heap, (-e2, counter + 1, mid, p_hi, v2, e2, depth + 1))
        counter += 2
        if counter % 64 < 2:
            # resum to stop drift from the running updates
            value = math.fsum(item[4] for item in heap)
            err = math.fsum(item[5] for item in heap)

    value = math.fsum(item[4] for item in heap)
    err = math.fsum(item[5] for item in heap)
    return QuadratureResult(value=value, err_estimate=err, evaluations=evaluations)


def perimeter_quadrature(axes: EllipseAxes, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Four times the quarter-arc integral of sqrt(a^2 sin^2 + b^2 cos^2)."""
    xi = axes.b / axes.a
    xi2 = xi * xi

    def integrand(phi: float) -> float:
        s = math.sin(phi)
        c = math.cos(phi)
        return math.sqrt(s * s + xi2 * c * c)

    # integrate the unit-a shape so the tolerances are dimensionless;
    # the integrand bends on a scale xi near phi = 0
    pts = graded_points(0.0, xi, HALF_PI)
    return 4.0 * axes.a * integrate(integrand, 0.0, HALF_PI, spec, pts).value


def F_numeric(t: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """(2/pi) * integral of sqrt(1 + t cos^2 phi) over [0, pi/2]."""
    if not t >= -1.0:
        raise DomainError(f"F(t) needs t >= -1, got {t!r}")

    def integrand(phi: float) -> float:
        c = math.cos(phi)
        return math.sqrt(max(1.0 + t * c * c, 0.0))

    pts = graded_points(0.0, math.sqrt((1.0 + t) / -t), HALF_PI) if t < 0.0 else ()
    return integrate(integrand, 0.0, HALF_PI, spec, pts).value / HALF_PI


def _check_xi(xi: float) -> None:
    if not 0.0 < xi <= 1.0:
        raise DomainError(f"xi must lie in (0, 1], got {xi!r}")


def J_numeric(xi: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Integral of 1/(xi + sin phi) over [0, pi/2]."""
    _check_xi(xi)
    pts = graded_points(0.0, xi, HALF_PI)
    return integrate(lambda phi: 1.0 / (xi + math.sin(phi)), 0.0, HALF_PI, spec, pts).value


def K_numeric(xi: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Integral of cos^2 phi / (xi + sin phi) over [0, pi/2]."""
    _check_xi(xi)

    def integrand(phi: float) -> float:
        c = math.cos(phi)
        return c * c / (xi + math.sin(phi))

    return integrate(integrand, 0.0, HALF_PI, spec, graded_points(0.0, xi, HALF_PI)).value
