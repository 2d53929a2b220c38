"""Complete elliptic integral of the second kind by the arithmetic-geometric mean.

This is the fast reference for the perimeter.  It shares no code with
:mod:`ellipse_perimeter.quadrature`, so agreement between the two is a
genuine cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .geometry import EllipseAxes

TWO_OVER_PI = 2.0 / math.pi


@dataclass(frozen=True)
class AgmSpec:
    tol: float = 1e-15
    max_iter: int = 40

    def __post_init__(self):
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")
        if self.max_iter < 4:
            raise ValueError("max_iter must be at least 4")


DEFAULT_AGM = AgmSpec()


def agm_sequence(p: float, q: float, spec: AgmSpec = DEFAULT_AGM) -> list[tuple[float, float]]:
    """Arithmetic and geometric means ``(a_n, g_n)`` from ``(p, q)`` until they meet."""
    if p <= 0.0 or q < 0.0:
        raise DomainError(f"AGM needs positive arguments, got ({p!r}, {q!r})")
    seq = [(p, q)]
    a, g = p, q
    for _ in range(spec.max_iter):
        if abs(a - g) <= spec.tol * a:
            return seq
        a, g = 0.5 * (a + g), math.sqrt(a * g)
        seq.append((a, g))
    raise ConvergenceError(f"AGM({p!r}, {q!r}) did not converge in {spec.max_iter} steps")


def quarter_arc(p: float, q: float, spec: AgmSpec = DEFAULT_AGM) -> float:
    """Integral of sqrt(p^2 cos^2 + q^2 sin^2) over [0, pi/2], symmetric in p and q.

    Uses pi/(2 M) * ((p^2 + q^2)/2 - sum_{n>=1} 2^(n-1) c_n^2) with
    M = AGM(p, q) and c_n = (a_{n-1} - g_{n-1}) / 2.
    """
    if p < q:
        p, q = q, p
    if q == 0.0:
        return p
    seq = agm_sequence(p, q, spec)
    acc = 0.5 * (p * p + q * q)
    weight = 0.5
    for (a_prev, g_prev), _ in zip(seq, seq[1:]):
        c = 0.5 * (a_prev - g_prev)
        weight *= 2.0
        acc -= weight * c * c
    return 0.5 * math.pi * acc / seq[-1][0]


def agm_E(m: float, spec: AgmSpec = DEFAULT_AGM) -> float:
    """E(m) = integral of sqrt(1 - m sin^2 phi) over [0, pi/2] for 0 <= m <= 1."""
    if not 0.0 <= m <= 1.0:
        raise DomainError(f"E(m) needs 0 <= m <= 1, got {m!r}")
    if m == 1.0:
        return 1.0
    return quarter_arc(1.0, math.sqrt(1.0 - m), spec)


def perimeter_agm(axes: EllipseAxes, spec: AgmSpec = DEFAULT_AGM) -> float:
    # 4 a E(e^2), fed with b/a directly so tiny b keeps its precision
    if axes.b == 0.0:
        return 4.0 * axes.a
    return 4.0 * axes.a * quarter_arc(1.0, axes.b / axes.a, spec)


def F_closed(t: float, spec: AgmSpec = DEFAULT_AGM) -> float:
    """The mean of sqrt(1 + t cos^2 phi) over [0, pi/2], for t >= -1."""
    if not t >= -1.0:
        raise DomainError(f"F(t) needs t >= -1, got {t!r}")
    if t <= 0.0:
        # (2/pi) E(-t)
        return TWO_OVER_PI * quarter_arc(1.0, math.sqrt(1.0 + t), spec)
    # sqrt(1+t) cos^2 + sin^2 form; the AGM takes the unnormalised pair
    return TWO_OVER_PI * quarter_arc(math.sqrt(1.0 + t), 1.0, spec)


def landen_residual(t: float, spec: AgmSpec = DEFAULT_AGM) -> float:
    """|F(t) - sqrt(1+t) F(-t/(1+t))|, which vanishes identically for t > -1."""
    if not t > -1.0:
        raise DomainError(f"the reflection needs t > -1, got {t!r}")
    return abs(F_closed(t, spec) - math.sqrt(1.0 + t) * F_closed(-t / (1.0 + t), spec))


def F_asymptotic(t: float) -> float:
    """Large-t asymptote (2/pi) sqrt(t). Not a bound."""
    if not t > 0.0:
        raise DomainError(f"asymptote defined for t > 0, got {t!r}")
    return TWO_OVER_PI * math.sqrt(t)
