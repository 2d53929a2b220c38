"""Series and special-function representations of the perimeter.

Every series is summed with a ratio recurrence between consecutive terms.
Summation stops once two consecutive terms fall below
``term_tol * |partial sum|``; running out of ``max_terms`` is reported through
``SeriesResult.converged`` rather than raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivergenceError, DomainError
from .geometry import EllipseAxes, shape_params
from .quadrature import DEFAULT_SPEC, QuadratureSpec, graded_points, integrate

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class SeriesSpec:
    max_terms: int = 200
    term_tol: float = 1e-16

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")
        if not self.term_tol > 0.0:
            raise ValueError("term_tol must be positive")


@dataclass(frozen=True)
class SeriesResult:
    """A partial sum with its stopping metadata.

    ``terms_used`` counts the leading (index 0) term.
    """

    value: float
    terms_used: int
    converged: bool
    last_term_magnitude: float

    def scaled(self, factor: float) -> "SeriesResult":
        return SeriesResult(self.value * factor, self.terms_used, self.converged, self.last_term_magnitude)


DEFAULT_SERIES = SeriesSpec()


def double_factorial_odd(k: int) -> float:
    """(2k-1)!! as a float, with (-1)!! = 1."""
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    out = 1.0
    for j in range(3, 2 * k, 2):
        out *= j
    if math.isinf(out):
        raise OverflowError(f"(2k-1)!! overflows a double for k = {k}")
    return out


def cos_moment(k: int) -> float:
    """Integral of cos^(2k) over [0, pi/2], via A_k = (2k-1)/(2k) A_{k-1}, A_0 = pi/2."""
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    out = HALF_PI
    for j in range(1, k + 1):
        out *= (2 * j - 1) / (2 * j)
    return out


def _sum_series(first_term: float, ratio, spec: SeriesSpec) -> SeriesResult:
    """Sum ``first_term + sum_k term_k`` where ``term_k = term_{k-1} * ratio(k)``."""
    total = first_term
    term = first_term
    used = 1
    small = 0
    for k in range(1, spec.max_terms):
        term *= ratio(k)
        total += term
        used += 1
        if term == 0.0:
            return SeriesResult(total, used, True, 0.0)
        if abs(term) < spec.term_tol * abs(total):
            small += 1
            if small == 2:
                return SeriesResult(total, used, True, abs(term))
        else:
            small = 0
    return SeriesResult(total, used, False, abs(term))


def euler_maclaurin_ratio(k: int, t: float) -> float:
    """term_k / term_{k-1} for term_k = (-1)^(k+1) [(2k-1)!!/(2^k k!)]^2 t^k / (2k-1).

    The k = 0 instance of that formula is the leading 1.
    """
    return -t * (2 * k - 1) * (2 * k - 3) / (4.0 * k * k)


def euler_maclaurin_series(t: float, spec: SeriesSpec = DEFAULT_SERIES) -> SeriesResult:
    """1 + sum_{k>=1} (-1)^(k+1) [(2k-1)!!/(2^k k!)]^2 t^k / (2k-1), for |t| < 1."""
    if not -1.0 < t < 1.0:
        raise DivergenceError(f"series in t needs |t| < 1, got {t!r}")
    if t == 0.0:
        return SeriesResult(1.0, 1, True, 0.0)
    return _sum_series(1.0, lambda k: euler_maclaurin_ratio(k, t), spec)


def euler_maclaurin_perimeter(axes: EllipseAxes, spec: SeriesSpec = DEFAULT_SERIES) -> SeriesResult:
    """2 pi a times the alternating series in t = b^2/a^2 - 1."""
    if axes.b == 0.0:
        raise DomainError("euler-maclaurin series undefined at b=0 (t = -1)")
    return euler_maclaurin_series(shape_params(axes).t, spec).scaled(2.0 * math.pi * axes.a)


def hyp2f1(p: float, q: float, c: float, x: float, spec: SeriesSpec = DEFAULT_SERIES) -> SeriesResult:
    """Gauss series for 2F1(p, q; c; x) on |x| < 1; no analytic continuation."""
    if not -1.0 < x < 1.0:
        raise DivergenceError(f"2F1 series needs |x| < 1, got {x!r}")
    if c <= 0.0 and c == math.floor(c):
        raise DomainError(f"2F1 has a pole at c = {c!r}")
    if x == 0.0:
        return SeriesResult(1.0, 1, True, 0.0)

    def ratio(k: int) -> float:
        j = k - 1
        return (p + j) * (q + j) / ((c + j) * k) * x

    return _sum_series(1.0, ratio, spec)


def maclaurin_perimeter(axes: EllipseAxes, spec: SeriesSpec = DEFAULT_SERIES) -> SeriesResult:
    """2 pi a 2F1(-1/2, 1/2; 1; e^2)."""
    if axes.b == 0.0:
        raise DivergenceError("maclaurin series diverges at b=0 (argument 1)")
    return hyp2f1(-0.5, 0.5, 1.0, shape_params(axes).e2, spec).scaled(2.0 * math.pi * axes.a)


def gauss_kummer_perimeter(axes: EllipseAxes, spec: SeriesSpec = DEFAULT_SERIES) -> SeriesResult:
    """pi (a+b) 2F1(-1/2, -1/2; 1; h), h = ((a-b)/(a+b))^2.

    Both upper parameters are -1/2.  The variant with (-1/2, 1/2), as it is
    sometimes printed, sums to a value below pi (a+b) and is not the perimeter.
    """
    if axes.b == 0.0:
        raise DivergenceError("gauss-kummer series diverges at b=0 (argument 1)")
    return hyp2f1(-0.5, -0.5, 1.0, shape_params(axes).h, spec).scaled(math.pi * (axes.a + axes.b))


def euler_2f1_perimeter(axes: EllipseAxes, spec: SeriesSpec = DEFAULT_SERIES) -> SeriesResult:
    """pi sqrt(2(a^2+b^2)) 2F1(1/4, -1/4; 1; ((a^2-b^2)/(a^2+b^2))^2)."""
    if axes.b == 0.0:
        raise DivergenceError("euler-2f1 series diverges at b=0 (argument 1)")
    xi = axes.b / axes.a
    u = (1.0 - xi) * (1.0 + xi) / (1.0 + xi * xi)
    prefactor = math.pi * axes.a * math.sqrt(2.0 * (1.0 + xi * xi))
    return hyp2f1(0.25, -0.25, 1.0, u * u, spec).scaled(prefactor)


# (coefficient, subtracted constant) per power of (b/a)^2; products 1*2, 3*4, 5*6 in the denominators
_CAYLEY_TERMS = (
    (1.0 / 2.0, 1.0 / (1 * 2)),
    (1.0**2 * 3 / (2.0**2 * 4), 2.0 / (1 * 2) + 1.0 / (3 * 4)),
    (1.0**2 * 3**2 * 5 / (2.0**2 * 4**2 * 6), 2.0 / (1 * 2) + 2.0 / (3 * 4) + 1.0 / (5 * 6)),
)


def cayley_perimeter(axes: EllipseAxes, order: int = 6) -> float:
    """Cayley's expansion in ln(4a/b), truncated after the (b/a)^order term.

    Only the printed orders 2, 4 and 6 are available; the general term is not
    extrapolated.  Accurate for small b/a only.
    """
    if order not in (2, 4, 6):
        raise DomainError(f"cayley order must be 2, 4 or 6, got {order}")
    if axes.b == 0.0:
        raise DomainError("cayley undefined at b=0 (ln(4a/b) diverges)")
    if axes.b >= axes.a:
        raise DomainError("cayley expansion needs b < a strictly")
    x2 = (axes.b / axes.a) ** 2
    lg = math.log(4.0 * axes.a / axes.b)
    total = 1.0
    power = 1.0
    for coeff, shift in _CAYLEY_TERMS[: order // 2]:
        power *= x2
        total += coeff * (lg - shift) * power
    return 4.0 * axes.a * total


def legendre_p_half(z: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """P_{1/2}(z) for z >= 1 from the Laplace integral (1/pi) int_0^pi sqrt(z + sqrt(z^2-1) cos theta)."""
    if not z >= 1.0:
        raise DomainError(f"P_1/2(z) needs z >= 1, got {z!r}")
    if z == 1.0:
        return 1.0
    s = math.sqrt((z - 1.0) * (z + 1.0))
    floor = 1.0 / (z + s)  # z - s without the cancellation

    def integrand(theta: float) -> float:
        c = math.cos(0.5 * theta)
        return math.sqrt(floor + 2.0 * s * c * c)

    # near theta = pi the integrand bends on a scale sqrt(floor / s)
    pts = graded_points(math.pi, -math.sqrt(floor / s), math.pi)
    return integrate(integrand, 0.0, math.pi, spec, pts).value / math.pi


def abbott_perimeter(axes: EllipseAxes, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """2 pi sqrt(ab) P_{1/2}((a^2+b^2)/(2ab))."""
    if axes.b == 0.0:
        raise DomainError("abbott undefined at b=0 (Legendre argument diverges)")
    xi = axes.b / axes.a
    z = 1.0 + (1.0 - xi) ** 2 / (2.0 * xi)
    return 2.0 * math.pi * math.sqrt(axes.a) * math.sqrt(axes.b) * legendre_p_half(z, spec)
