"""Lower and upper bounds on the perimeter, and the closed-form integrals behind the log bound.

All bounds are for the full perimeter.  ``quarter_*`` helpers give the
quarter-arc versions that the sweep reports.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import DomainError
from .geometry import EllipseAxes

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class BoundBracket:
    lower_geometric: float
    lower_arithmetic: float
    upper_linear: float
    upper_log: float
    certified_lower: float
    certified_upper: float

    def contains(self, value: float, rel_slack: float = 0.0) -> bool:
        slack = rel_slack * abs(value)
        return self.certified_lower - slack <= value <= self.certified_upper + slack

    def as_dict(self) -> dict:
        return asdict(self)


def lower_geometric(axes: EllipseAxes) -> float:
    """2 pi sqrt(ab): the circle with the same area has the least perimeter."""
    return 2.0 * math.pi * math.sqrt(axes.a) * math.sqrt(axes.b)


def lower_arithmetic(axes: EllipseAxes) -> float:
    return math.pi * (axes.a + axes.b)


def upper_linear(axes: EllipseAxes) -> float:
    return 4.0 * axes.a + math.pi * axes.b


def _log_term(xi: float) -> tuple[float, float]:
    # s = sqrt(1 - xi^2) and ln((1 + s)/xi) == asinh(s/xi), the latter exact near xi = 1
    s = math.sqrt((1.0 - xi) * (1.0 + xi))
    if xi < 0.5:
        # s / xi can overflow for subnormal xi
        return s, math.log1p(s) - math.log(xi)
    return s, math.asinh(s / xi)


def J_closed(xi: float) -> float:
    """ln((1 + sqrt(1-xi^2))/xi) / sqrt(1-xi^2) for 0 < xi < 1.

    The limit at xi -> 1 is 1, but xi = 1 itself is rejected.
    """
    if not 0.0 < xi < 1.0:
        raise DomainError(f"J closed form needs 0 < xi < 1, got {xi!r}")
    s, lg = _log_term(xi)
    return lg / s


def K_closed(xi: float) -> float:
    """xi pi/2 - 1 + sqrt(1-xi^2) ln((1 + sqrt(1-xi^2))/xi) for 0 < xi <= 1."""
    if not 0.0 < xi <= 1.0:
        raise DomainError(f"K closed form needs 0 < xi <= 1, got {xi!r}")
    if xi == 1.0:
        return HALF_PI - 1.0
    s, lg = _log_term(xi)
    return xi * HALF_PI - 1.0 + s * lg


def upper_log(axes: EllipseAxes) -> float:
    """4a + 4 (b/a)^2 [sqrt(a^2-b^2) ln((a + sqrt(a^2-b^2))/b) + (pi/2) b - a].

    Written as 4a (1 + xi^2 K(xi)) with xi = b/a.  Exact at b = 0 (4a) and b = a (2 pi a).
    """
    if axes.b == 0.0:
        return 4.0 * axes.a
    xi = axes.b / axes.a
    return 4.0 * axes.a * (1.0 + xi * xi * K_closed(xi))


def quarter_upper_linear(axes: EllipseAxes) -> float:
    return axes.a + 0.25 * math.pi * axes.b


def quarter_upper_log(axes: EllipseAxes) -> float:
    if axes.b == 0.0:
        return axes.a
    xi = axes.b / axes.a
    return axes.a * (1.0 + xi * xi * K_closed(xi))


def bound_bracket(axes: EllipseAxes) -> BoundBracket:
    lg = lower_geometric(axes)
    la = lower_arithmetic(axes)
    ul = upper_linear(axes)
    ulog = upper_log(axes)
    return BoundBracket(
        lower_geometric=lg,
        lower_arithmetic=la,
        upper_linear=ul,
        upper_log=ulog,
        certified_lower=max(lg, la),
        certified_upper=min(ul, ulog),
    )
