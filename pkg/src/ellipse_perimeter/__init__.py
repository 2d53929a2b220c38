"""Ellipse perimeter: reference values, certified bounds, and classical approximations."""

from .approximations import ApproximationId, ApproxReport, approximate, report_all
from .bounds import (
    BoundBracket,
    J_closed,
    K_closed,
    bound_bracket,
    lower_arithmetic,
    lower_geometric,
    upper_linear,
    upper_log,
)
from .elliptic import AgmSpec, F_asymptotic, F_closed, agm_E, landen_residual, perimeter_agm
from .errors import (
    BudgetExhaustedError,
    ConvergenceError,
    DivergenceError,
    DomainError,
    NonFiniteError,
)
from .geometry import EllipseAxes, ShapeParams, canonicalize, shape_params
from .quadrature import (
    F_numeric,
    J_numeric,
    K_numeric,
    QuadratureResult,
    QuadratureSpec,
    integrate,
    perimeter_quadrature,
)
from .series import (
    SeriesResult,
    SeriesSpec,
    abbott_perimeter,
    cayley_perimeter,
    cos_moment,
    double_factorial_odd,
    euler_2f1_perimeter,
    euler_maclaurin_perimeter,
    gauss_kummer_perimeter,
    hyp2f1,
    legendre_p_half,
    maclaurin_perimeter,
)

__version__ = "0.1.0"
