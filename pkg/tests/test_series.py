import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ellipse_perimeter import (
    DivergenceError,
    DomainError,
    SeriesSpec,
    abbott_perimeter,
    canonicalize,
    cayley_perimeter,
    cos_moment,
    double_factorial_odd,
    euler_2f1_perimeter,
    euler_maclaurin_perimeter,
    gauss_kummer_perimeter,
    hyp2f1,
    integrate,
    legendre_p_half,
    maclaurin_perimeter,
    perimeter_agm,
)
from ellipse_perimeter.series import euler_maclaurin_ratio

from conftest import PERIMETER_2_1

EXACT_FORMS = [euler_maclaurin_perimeter, maclaurin_perimeter, gauss_kummer_perimeter, euler_2f1_perimeter]


@pytest.mark.parametrize("k, expected", [(0, 1.0), (1, 1.0), (3, 15.0), (5, 945.0)])
def test_double_factorial(k, expected):
    assert double_factorial_odd(k) == expected


def test_double_factorial_overflow():
    with pytest.raises(OverflowError):
        double_factorial_odd(400)


@pytest.mark.parametrize("k, expected", [(0, math.pi / 2), (1, math.pi / 4), (2, 3 * math.pi / 16)])
def test_cos_moment_examples(k, expected):
    assert cos_moment(k) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("k", range(21))
def test_cos_moment_vs_quadrature(k):
    numeric = integrate(lambda x: math.cos(x) ** (2 * k), 0.0, math.pi / 2).value
    assert cos_moment(k) == pytest.approx(numeric, abs=1e-12)
    closed = double_factorial_odd(k) / (2**k * math.factorial(k)) * math.pi / 2
    assert cos_moment(k) == pytest.approx(closed, rel=1e-14)


@pytest.mark.parametrize("k", range(1, 21))
def test_euler_maclaurin_coefficient_two_routes(k):
    # route 1: (2k-3)!!/(2^k k!) * (2/pi) A_k ; route 2: [(2k-1)!!/(2^k k!)]^2 / (2k-1)
    dfm3 = 1.0 if k == 1 else double_factorial_odd(k - 1)
    via_moment = dfm3 / (2**k * math.factorial(k)) * cos_moment(k) * 2 / math.pi
    squared = (double_factorial_odd(k) / (2**k * math.factorial(k))) ** 2 / (2 * k - 1)
    explicit = dfm3 * double_factorial_odd(k) / (4**k * math.factorial(k) ** 2)
    assert via_moment == pytest.approx(squared, rel=1e-14)
    assert explicit == pytest.approx(squared, rel=1e-14)
    # the summation's ratio recurrence reproduces the same coefficient
    term = 1.0
    for j in range(1, k + 1):
        term *= euler_maclaurin_ratio(j, 1.0)
    assert term == pytest.approx((-1) ** (k + 1) * squared, rel=1e-13)


def test_euler_maclaurin_examples():
    circle = euler_maclaurin_perimeter(canonicalize(1, 1))
    assert circle.value == 2 * math.pi
    assert circle.terms_used == 1
    assert circle.converged
    short = euler_maclaurin_perimeter(canonicalize(2, 1), SeriesSpec(max_terms=80))
    assert short.value == pytest.approx(PERIMETER_2_1, rel=1e-10)
    full = euler_maclaurin_perimeter(canonicalize(2, 1))
    assert full.converged
    assert full.value == pytest.approx(PERIMETER_2_1, rel=1e-14)
    slow = euler_maclaurin_perimeter(canonicalize(1, 0.05), SeriesSpec(max_terms=100))
    assert not slow.converged
    assert slow.terms_used == 100
    # 100 terms leave a visible gap to the reference 4 E(1 - 0.0025)
    assert abs(slow.value - 4.0194256191459615) > 1e-3


def test_euler_maclaurin_domain():
    with pytest.raises(DomainError):
        euler_maclaurin_perimeter(canonicalize(1, 0))


def test_hyp2f1_examples():
    assert hyp2f1(0.3, 0.7, 1.0, 0.0).value == 1.0
    gk = hyp2f1(-0.5, -0.5, 1.0, 1 / 9)
    assert gk.value == pytest.approx(PERIMETER_2_1 / (3 * math.pi), rel=1e-15)
    assert gk.value == pytest.approx(1.0279762834600267, rel=1e-15)
    eu = hyp2f1(0.25, -0.25, 1.0, 0.36)
    assert eu.value == pytest.approx(PERIMETER_2_1 / (math.pi * math.sqrt(10)), rel=1e-15)


@pytest.mark.parametrize("p, q, c, x", [(0.5, 0.5, 1.0, 0.9), (-0.5, 0.5, 1.0, 0.75), (1.3, -2.2, 3.5, -0.6),
                                        (-2.0, 1.5, 1.0, 0.4)])
def test_hyp2f1_against_mpmath(p, q, c, x):
    res = hyp2f1(p, q, c, x, SeriesSpec(max_terms=2000))
    assert res.converged
    assert res.value == pytest.approx(float(mpmath.hyp2f1(p, q, c, x)), rel=1e-13)


def test_hyp2f1_polynomial_terminates():
    res = hyp2f1(-2.0, 1.5, 1.0, 0.4)
    assert res.terms_used == 4  # degree-2 polynomial, third increment is exactly zero


@pytest.mark.parametrize("x", [1.0, -1.0, 1.5])
def test_hyp2f1_divergence(x):
    with pytest.raises(DivergenceError):
        hyp2f1(0.5, 0.5, 1.0, x)


def test_hyp2f1_pole():
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, -2.0, 0.3)


def test_hyp2f1_remainder_bounded_by_first_omitted_term():
    # (-1/2, 1/2; 1; x): every term after the first is negative, so the tail has fixed sign
    x = 0.6
    exact = float(mpmath.hyp2f1(-0.5, 0.5, 1, x))
    for n in range(2, 25):
        partial = hyp2f1(-0.5, 0.5, 1.0, x, SeriesSpec(max_terms=n, term_tol=1e-300)).value
        nxt = hyp2f1(-0.5, 0.5, 1.0, x, SeriesSpec(max_terms=n + 1, term_tol=1e-300)).value
        omitted = nxt - partial
        assert omitted < 0
        assert partial > exact
        assert abs(exact - partial) >= abs(omitted) * (1 - 1e-12)


@pytest.mark.parametrize("fn", EXACT_FORMS)
def test_circle_one_term(fn):
    res = fn(canonicalize(1, 1))
    assert res.value == 2 * math.pi
    assert res.terms_used == 1


@pytest.mark.parametrize("fn", [maclaurin_perimeter, gauss_kummer_perimeter, euler_2f1_perimeter])
def test_segment_rejected(fn):
    with pytest.raises(DivergenceError):
        fn(canonicalize(1, 0))


def test_gauss_kummer_fast():
    gk = gauss_kummer_perimeter(canonicalize(2, 1))
    mac = maclaurin_perimeter(canonicalize(2, 1))
    assert gk.terms_used <= 15
    assert gk.value == pytest.approx(PERIMETER_2_1, rel=1e-15)
    assert mac.value == pytest.approx(PERIMETER_2_1, rel=1e-14)
    assert mac.terms_used > gk.terms_used


@given(st.floats(0.05, 0.999))
def test_gauss_kummer_never_slower(ratio):
    axes = canonicalize(1.0, ratio)
    assert gauss_kummer_perimeter(axes).terms_used < maclaurin_perimeter(axes).terms_used


@given(st.floats(0.3, 1.0), st.floats(0.1, 10.0))
def test_exact_forms_agree_with_oracle(ratio, a):
    axes = canonicalize(a, a * ratio)
    oracle = perimeter_agm(axes)
    for fn in EXACT_FORMS:
        assert fn(axes).value == pytest.approx(oracle, rel=1e-9)


def test_cayley_small_ratio():
    axes = canonicalize(1, 0.1)
    oracle = 4.0639741801008957  # 4 E(0.99), mpmath
    assert cayley_perimeter(axes, 6) == pytest.approx(oracle, rel=1e-6)


def test_cayley_degrades_with_ratio():
    axes = canonicalize(1, 0.5)
    err = abs(cayley_perimeter(axes, 6) - perimeter_agm(axes)) / perimeter_agm(axes)
    assert 1e-4 < err < 1e-3


def test_cayley_order_monotone():
    axes = canonicalize(1, 0.01)
    oracle = perimeter_agm(axes)
    errs = [abs(cayley_perimeter(axes, k) - oracle) for k in (2, 4, 6)]
    assert errs[0] > errs[1] > errs[2]


def test_cayley_coefficients_as_printed():
    # coefficients 1/2, 3/16, 45/384 with shifts 1/2, 1 + 1/12, 1 + 1/6 + 1/30
    a, b = 1.0, 0.2
    lg = math.log(4 * a / b)
    x2 = (b / a) ** 2
    expected = 4 * a * (1 + 0.5 * (lg - 0.5) * x2 + 3 / 16 * (lg - 1 - 1 / 12) * x2**2
                        + 45 / 384 * (lg - 1 - 1 / 6 - 1 / 30) * x2**3)
    assert cayley_perimeter(canonicalize(a, b), 6) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("a, b, order", [(1, 0, 6), (1, 1, 6), (1, 0.5, 3), (1, 0.5, 8)])
def test_cayley_domain(a, b, order):
    with pytest.raises(DomainError):
        cayley_perimeter(canonicalize(a, b), order)


def test_legendre_p_half():
    assert legendre_p_half(1.0) == 1.0
    assert legendre_p_half(1.25) == pytest.approx(1.0903335014002942, rel=1e-13)
    assert legendre_p_half(1.25) == pytest.approx(PERIMETER_2_1 / (2 * math.pi * math.sqrt(2)), rel=1e-13)
    with pytest.raises(DomainError):
        legendre_p_half(0.99)


@pytest.mark.parametrize("z", [1.001, 2.0, 5.05, 50.0, 1e4])
def test_legendre_against_mpmath(z):
    assert legendre_p_half(z) == pytest.approx(float(mpmath.legenp(0.5, 0, z, type=3)), rel=1e-12)


def test_abbott():
    assert abbott_perimeter(canonicalize(1, 1)) == pytest.approx(2 * math.pi, rel=1e-15)
    assert abbott_perimeter(canonicalize(2, 1)) == pytest.approx(PERIMETER_2_1, rel=1e-12)
    axes = canonicalize(1, 0.1)
    assert abbott_perimeter(axes) == pytest.approx(perimeter_agm(axes), rel=1e-9)
    with pytest.raises(DomainError):
        abbott_perimeter(canonicalize(1, 0))


def test_series_spec_validation():
    with pytest.raises(ValueError):
        SeriesSpec(max_terms=0)
    with pytest.raises(ValueError):
        SeriesSpec(term_tol=0.0)
