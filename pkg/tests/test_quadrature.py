import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koshzeta.quadrature import (
    AutoHorizon,
    FixedHorizon,
    QuadSpec,
    QuadratureError,
    integrate_interval,
    integrate_semi_infinite,
    integrate_vertical_line,
)

TIGHT = QuadSpec(abs_tol=1e-12, rel_tol=1e-12, horizon=AutoHorizon(1e-13, rate=1.0))


def test_planck_moment():
    # int_0^inf t/(e^{2 pi t}-1) dt = 1/24
    spec = QuadSpec(abs_tol=1e-13, rel_tol=1e-13,
                    horizon=AutoHorizon(1e-14, rate=2 * math.pi))
    res = integrate_semi_infinite(lambda t: t / math.expm1(2 * math.pi * t), spec)
    assert abs(res.value.real - 1.0 / 24.0) < 1e-12


def test_exponential():
    res = integrate_semi_infinite(lambda t: math.exp(-t), TIGHT)
    assert abs(res.value.real - 1.0) < 1e-12
    assert res.nodes_used > 0
    assert res.abs_err_estimate < 1e-10


def test_gaussian_moment():
    spec = QuadSpec(abs_tol=1e-13, rel_tol=1e-13,
                    horizon=AutoHorizon(1e-14, rate=1.0, power=2.0))
    res = integrate_semi_infinite(lambda t: t * math.exp(-t * t), spec)
    assert abs(res.value.real - 0.5) < 1e-12


def test_vertical_line_exponential():
    res = integrate_vertical_line(lambda y: cmath.exp(-2 * math.pi * y), TIGHT)
    assert abs(res.value - 1.0 / (2 * math.pi)) < 1e-12


def test_vertical_line_complex_closed_form():
    res = integrate_vertical_line(
        lambda y: math.exp(-y) * complex(math.cos(y), math.sin(y)), TIGHT
    )
    assert abs(res.value - 1.0 / (1.0 - 1.0j)) < 1e-12


@settings(max_examples=25, deadline=None)
@given(c=st.floats(min_value=0.05, max_value=8.0))
def test_splitting_linearity(c):
    f = lambda t: math.exp(-t) * math.cos(t)
    whole = integrate_semi_infinite(f, TIGHT)
    split = integrate_semi_infinite(
        f, QuadSpec(abs_tol=1e-12, rel_tol=1e-12,
                    horizon=AutoHorizon(1e-13, rate=1.0), split_points=(c,))
    )
    budget = whole.abs_err_estimate + split.abs_err_estimate + 1e-13
    assert abs(whole.value - split.value) <= budget


def test_tolerance_monotonicity():
    f = lambda t: math.exp(-t) * math.cos(3.0 * t)
    exact = 0.1  # 1/(1+9)
    errs = []
    for tol in (1e-4, 1e-6, 1e-8, 1e-10, 1e-12):
        spec = QuadSpec(abs_tol=tol, rel_tol=tol, horizon=FixedHorizon(40.0, 0.0))
        errs.append(abs(integrate_semi_infinite(f, spec).value.real - exact))
        assert errs[-1] <= tol
    for a, b in zip(errs, errs[1:]):
        assert b <= a + 1e-15


def test_series_patch_replaces_origin():
    # integrand with a 0/0 written badly; the patch supplies the limit form
    def bad(t):
        return math.expm1(t) / t * math.exp(-2 * t)  # fine, but pretend 0/0

    def patch(t):
        return (1.0 + t / 2.0 + t * t / 6.0) * math.exp(-2 * t)

    spec = QuadSpec(abs_tol=1e-11, rel_tol=1e-11, horizon=AutoHorizon(1e-12, rate=1.0))
    res = integrate_semi_infinite(bad, spec, series_patch=patch, patch_cutoff=1e-3)
    # exact: int expm1(t)/t e^{-2t} = log 2
    assert abs(res.value.real - math.log(2.0)) < 1e-9


def test_nonfinite_sample_raises():
    spec = QuadSpec(abs_tol=1e-8, rel_tol=1e-8, horizon=FixedHorizon(1.0, 0.0))
    with pytest.raises(QuadratureError, match="non-finite"):
        integrate_semi_infinite(lambda t: 1.0 / (t - 0.5), spec)


def test_budget_exhaustion_raises():
    spec = QuadSpec(abs_tol=1e-14, rel_tol=1e-14, max_subdivisions=3,
                    horizon=FixedHorizon(30.0, 0.0))
    with pytest.raises(QuadratureError, match="budget"):
        integrate_semi_infinite(lambda t: math.cos(40.0 * t) / (1 + t * t), spec)


def test_interval_engine_polynomial_exact():
    res = integrate_interval(lambda x: x**5, 0.0, 2.0, TIGHT)
    assert abs(res.value.real - 64.0 / 6.0) < 1e-12


def test_fixed_horizon_tail_recorded():
    spec = QuadSpec(abs_tol=1e-10, rel_tol=1e-10, horizon=FixedHorizon(5.0, 1e-9))
    res = integrate_semi_infinite(lambda t: math.exp(-t), spec)
    assert res.truncation_T == 5.0
    assert res.abs_err_estimate >= 1e-9
