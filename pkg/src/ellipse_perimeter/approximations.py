"""Classical closed-form approximations to the perimeter and their ranking against a reference value.

Two entries are commonly misprinted and are
evaluated in their historical form by default:

* Sipos is ``2 pi (a+b)^2 / (sqrt a + sqrt b)^2``.  The printed version puts
  the quotient under a square root, i.e. ``2 pi (a+b)/(sqrt a + sqrt b)``,
  which is off by about 19% at (2, 1).
* Ramanujan's second formula adds ``3 (a-b)^2 / (10(a+b) + sqrt(a^2+14ab+b^2))``
  to ``a + b``.  The printed minus sign gives a 5% error at (2, 1).

Pass ``as_printed=True`` to get the printed variants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import NonFiniteError
from .geometry import EllipseAxes

PI = math.pi


class ApproximationId(str, Enum):
    KEPLER = "kepler"
    NAIVE = "naive"
    EULER = "euler"
    SIPOS = "sipos"
    CESARO = "cesaro"
    MUIR = "muir"
    PEANO_BOUSSINESQ = "peano-boussinesq"
    ALMKVIST = "almkvist"
    LINDNER = "lindner"
    RAMANUJAN1 = "ramanujan1"
    RAMANUJAN2 = "ramanujan2"


APPROXIMATION_NAMES = tuple(member.value for member in ApproximationId)


@dataclass(frozen=True)
class ApproxReport:
    id: ApproximationId
    value: float
    abs_error: float
    rel_error: float


def _kepler(a, b, as_printed):
    return 2.0 * PI * math.sqrt(a * b)


def _naive(a, b, as_printed):
    return PI * (a + b)


def _euler(a, b, as_printed):
    return 2.0 * PI * math.sqrt(0.5 * (a * a + b * b))


def _sipos(a, b, as_printed):
    ratio = (a + b) ** 2 / (math.sqrt(a) + math.sqrt(b)) ** 2
    if as_printed:
        return 2.0 * PI * math.sqrt(ratio)
    return 2.0 * PI * ratio


def _cesaro(a, b, as_printed):
    return PI * (a + b) + 0.25 * PI * (a - b) ** 2 / (a + b)


def _muir(a, b, as_printed):
    return 2.0 * PI * (0.5 * (a**1.5 + b**1.5)) ** (2.0 / 3.0)


def _peano(a, b, as_printed):
    return PI * (1.5 * (a + b) - math.sqrt(a * b))


def _almkvist(a, b, as_printed):
    ra, rb = math.sqrt(a), math.sqrt(b)
    num = 2.0 * (a + b) ** 2 - (ra - rb) ** 4
    den = (ra + rb) ** 2 + 2.0 * math.sqrt(2.0 * (a + b)) * math.sqrt(ra * rb)
    return 2.0 * PI * num / den


def _lindner(a, b, as_printed):
    r = (a - b) / (a + b)
    return PI * (a + b) * (1.0 + r * r / 8.0) ** 2


def _ramanujan1(a, b, as_printed):
    return PI * (3.0 * (a + b) - math.sqrt((3.0 * a + b) * (a + 3.0 * b)))


def _ramanujan2(a, b, as_printed):
    corr = 3.0 * (a - b) ** 2 / (10.0 * (a + b) + math.sqrt(a * a + 14.0 * a * b + b * b))
    if as_printed:
        return PI * ((a + b) - corr)
    return PI * ((a + b) + corr)


_FORMULAS = {
    ApproximationId.KEPLER: _kepler,
    ApproximationId.NAIVE: _naive,
    ApproximationId.EULER: _euler,
    ApproximationId.SIPOS: _sipos,
    ApproximationId.CESARO: _cesaro,
    ApproximationId.MUIR: _muir,
    ApproximationId.PEANO_BOUSSINESQ: _peano,
    ApproximationId.ALMKVIST: _almkvist,
    ApproximationId.LINDNER: _lindner,
    ApproximationId.RAMANUJAN1: _ramanujan1,
    ApproximationId.RAMANUJAN2: _ramanujan2,
}


def approximate(id: ApproximationId | str, axes: EllipseAxes, as_printed: bool = False) -> float:
    """Evaluate one named approximation. ``id`` may be the enum or its string name."""
    formula = _FORMULAS[ApproximationId(id)]
    value = formula(axes.a, axes.b, as_printed)
    if not math.isfinite(value):
        raise NonFiniteError(f"{ApproximationId(id).value} gave {value!r} at a={axes.a}, b={axes.b}")
    return value


def report_all(axes: EllipseAxes, oracle: float, as_printed: bool = False) -> list[ApproxReport]:
    """Every approximation against ``oracle``, best first (ties broken by name)."""
    if not oracle > 0.0:
        raise ValueError(f"oracle must be positive, got {oracle!r}")
    reports = []
    for ident in ApproximationId:
        value = approximate(ident, axes, as_printed)
        err = value - oracle
        reports.append(ApproxReport(ident, value, err, err / oracle))
    reports.sort(key=lambda r: (abs(r.rel_error), r.id.value))
    return reports
