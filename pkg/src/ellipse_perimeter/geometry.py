"""Canonical ellipse axes and the dimensionless shape parameters derived from them."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class EllipseAxes:
    """Semi-axes with ``a >= b >= 0`` and ``a > 0``.

    Build these with :func:`canonicalize`; direct construction only validates.
    """

    a: float
    b: float
    swapped: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"axes must be finite, got a={self.a!r}, b={self.b!r}")
        if not (self.a >= self.b >= 0.0 and self.a > 0.0):
            raise DomainError(f"axes must satisfy a >= b >= 0 and a > 0, got a={self.a}, b={self.b}")


@dataclass(frozen=True)
class ShapeParams:
    e2: float
    t: float
    m: float
    h: float
    xi: float


def canonicalize(a: float, b: float) -> EllipseAxes:
    """Order two semi-axes so the larger one lands in ``a``.

    Raises DomainError for negative, non-finite or all-zero input.
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"axes must be finite, got a={a!r}, b={b!r}")
    if a < 0.0 or b < 0.0:
        raise DomainError(f"axes must be non-negative, got a={a}, b={b}")
    if a == 0.0 and b == 0.0:
        raise DomainError("at least one axis must be positive")
    if a < b:
        return EllipseAxes(b, a, swapped=True)
    return EllipseAxes(a, b)


def shape_params(axes: EllipseAxes) -> ShapeParams:
    xi = axes.b / axes.a
    # 1 - xi**2 factored so it stays accurate when xi is near 1
    e2 = (1.0 - xi) * (1.0 + xi)
    h = ((1.0 - xi) / (1.0 + xi)) ** 2
    return ShapeParams(e2=e2, t=-e2, m=e2, h=h, xi=xi)
