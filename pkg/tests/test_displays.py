"""Literal published-display forms of the boundary-regime corollaries,
checked against the general verifiers that are supposed to reduce to them."""

import math

from koshzeta import identities as I, special as S, sums, zeta as Z
from koshzeta.params import INFINITY, ZERO, KoshParam

PI = math.pi


def test_dedekind_zero_display():
    # sum 1/((2j-1)(e^{a(2j-1)}+1)) + (1/8) log a is invariant under
    # a <-> b, ab = pi^2
    def side(a):
        s = sum(
            1.0 / ((2 * j - 1) * (math.exp(a * (2 * j - 1)) + 1.0))
            for j in range(1, 60)
        )
        return s + math.log(a) / 8.0

    alpha = 2.0
    beta = PI * PI / alpha
    assert abs(side(alpha) - side(beta)) < 1e-14
    assert I.verify_dedekind(ZERO, alpha, tol=1e-10).passed


def test_e2_limit_displays():
    # infinity: a S(a) + b S(b) = (a+b)/24 - 1/4 with S = sum j/(e^{2ja}-1)
    alpha = 2.0
    beta = PI * PI / alpha

    def s_inf(a):
        return sum(j / math.expm1(2 * j * a) for j in range(1, 60))

    lhs = alpha * s_inf(alpha) + beta * s_inf(beta)
    assert abs(lhs - ((alpha + beta) / 24.0 - 0.25)) < 1e-14

    # zero: a (1/24 - T(a)) = -b (1/24 - T(b)) with T = sum (2j-1)/(e^{a(2j-1)}+1)
    def t_zero(a):
        return sum(
            (2 * j - 1) / (math.exp(a * (2 * j - 1)) + 1.0) for j in range(1, 60)
        )

    assert abs(
        alpha * (1.0 / 24.0 - t_zero(alpha)) + beta * (1.0 / 24.0 - t_zero(beta))
    ) < 1e-14


def test_lerch_infinity_classical_constant():
    # zeta(3) + 2 sum j^{-3}/(e^{2 pi j}-1) = 7 pi^3/180
    s = sums.lambert_sum(INFINITY, 1, PI, 1e-15).value
    lhs = Z.classical_zeta(3.0).real + 2.0 * s
    assert abs(lhs - 7.0 * PI**3 / 180.0) < 1e-13


def test_hurwitz_half_equivalence():
    # zeta_p(2m+1) at Zero equals the Hurwitz value zeta(2m+1, 1/2)
    for m in (1, 2):
        lhs = Z.zeta_p(ZERO, 2.0 * m + 1.0).value.real
        hurwitz = sum((n + 0.5) ** (-(2 * m + 1.0)) for n in range(0, 400_000))
        assert abs(lhs - hurwitz) < 1e-9


def test_F_real_even_in_n(p1):
    # the alpha <-> 1/alpha invariance of the relation forces the x-route
    # F to be even in n, matching the manifestly even spectral route
    a = I.F_p_real(p1, 0.3, 1e-10)
    b = I.F_p_real(p1, -0.3, 1e-10)
    assert abs(a - b) < 1e-9


def test_mellin_invariant_grid():
    for pv in (0.5, 1.0, 5.0):
        p = KoshParam.finite(pv)
        for s in (2.0, 2.5, 3.0):
            r = I.verify_mellin(p, s, tol=1e-8)
            assert r.passed, (pv, s, r.max_rel_dev)


def test_page220_zero_reduces_to_gamma_log_pi_alpha():
    # the constant block at Zero collapses to (gamma - log(pi a))/(2a)
    alpha = 2.0
    b0 = ZERO.b0()
    c = (
        S.euler_const_1(ZERO)
        + S.euler_const_2(ZERO)
        - (1 + b0) * math.log(2 * PI * alpha)
    )
    assert abs(c - (S.EULER_GAMMA - math.log(PI * alpha))) < 1e-15
