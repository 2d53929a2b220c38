"""First and second quarter-arc upper bounds along a range of minor axes."""

from __future__ import annotations

from dataclasses import dataclass

from . import bounds, elliptic
from .errors import DomainError
from .geometry import EllipseAxes


@dataclass(frozen=True)
class SweepRow:
    b: float
    oracle: float  # quarter arc
    f1: float
    f2: float
    perimeter: float
    upper_linear: float
    upper_log: float


SWEEP_COLUMNS = ("b", "oracle", "f1", "f2", "perimeter", "upper_linear", "upper_log")


def sweep_points(b_min: float, b_max: float, steps: int) -> list[float]:
    """``steps`` evenly spaced values from b_min to b_max inclusive."""
    span = b_max - b_min
    return [b_min + span * i / (steps - 1) for i in range(steps - 1)] + [b_max]


def sweep_rows(a: float, b_min: float, b_max: float, steps: int) -> list[SweepRow]:
    if not (0.0 <= b_min < b_max <= a):
        raise DomainError(f"sweep needs 0 <= b_min < b_max <= a, got b_min={b_min}, b_max={b_max}, a={a}")
    if steps < 2:
        raise DomainError(f"sweep needs at least 2 steps, got {steps}")
    rows = []
    for b in sweep_points(b_min, b_max, steps):
        axes = EllipseAxes(a, b)
        perimeter = elliptic.perimeter_agm(axes)
        rows.append(
            SweepRow(
                b=b,
                oracle=0.25 * perimeter,
                f1=bounds.quarter_upper_linear(axes),
                f2=bounds.quarter_upper_log(axes),
                perimeter=perimeter,
                upper_linear=bounds.upper_linear(axes),
                upper_log=bounds.upper_log(axes),
            )
        )
    return rows
