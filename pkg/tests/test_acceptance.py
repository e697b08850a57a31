"""Acceptance gate: every criterion at its stated tolerance.

Each test prints one [PASS]/[FAIL] line so the suite doubles as a
human-readable checklist; the assertion carries the same condition.
"""

import math
import time

import numpy as np

from koshzeta import (
    eigen,
    identities as I,
    kernels,
    special as S,
    sums,
    zeta as Z,
)
from koshzeta.params import INFINITY, ZERO, KoshParam

PI = math.pi


def _criterion(n: int, desc: str, ok: bool, detail: str = ""):
    tag = "PASS" if ok else "FAIL"
    print(f"[{tag}] criterion {n:2d}: {desc} {detail}")
    assert ok, f"criterion {n}: {desc} {detail}"


def test_criterion_01_zeta3():
    t0 = time.perf_counter()
    lam = sums.lambert_sum(ZERO, 1, PI, 1e-14)  # the exponent -3 sum
    s3 = sum((2 * j - 1) ** (-3) / (math.exp((2 * j - 1) * PI) + 1.0)
             for j in range(1, 25))
    lhs = Z.classical_zeta(3.0).real - (16.0 / 7.0) * s3
    dev_direct = abs(lhs - PI**3 / 28.0)
    r = I.verify_lerch_gen(ZERO, 0, tol=1e-10)
    elapsed = time.perf_counter() - t0
    ok = (
        dev_direct <= 1e-10
        and r.passed
        and r.max_abs_dev <= 1e-10
        and lam.terms_used < 30
        and elapsed < 1.0
    )
    _criterion(1, "zeta(3) identity at 1e-10", ok,
               f"(dev={r.max_abs_dev:.2e}, terms={lam.terms_used}, {elapsed:.2f}s)")


def test_criterion_02_zeta7():
    s7 = sum((2 * j - 1) ** (-7) / (math.exp((2 * j - 1) * PI) + 1.0)
             for j in range(1, 25))
    lhs = Z.classical_zeta(7.0).real - (256.0 / 127.0) * s7
    dev_direct = abs(lhs - 7.0 * PI**7 / 22860.0)
    r = I.verify_lerch_gen(ZERO, 1, tol=1e-10)
    ok = dev_direct <= 1e-10 and r.passed and r.max_abs_dev <= 1e-10
    _criterion(2, "zeta(7) identity at 1e-10", ok, f"(dev={r.max_abs_dev:.2e})")


def test_criterion_03_classical_lambert():
    v1 = sums.lambert_sum_positive(INFINITY, 0, PI, 1e-14).value
    dev1 = abs(v1 - (1.0 / 24.0 - 1.0 / (8.0 * PI)))
    v2 = -2.0 * sums.lambert_sum_positive(ZERO, 0, PI, 1e-14).value
    dev2 = abs(v2 - 1.0 / 24.0)
    ok = dev1 <= 1e-12 and dev2 <= 1e-12
    _criterion(3, "classical Lambert evaluations at 1e-12", ok,
               f"(devs {dev1:.2e}, {dev2:.2e})")


def test_criterion_04_glaisher_apostol():
    g = sums.lambert_sum_positive(INFINITY, 2, PI, 1e-14).value
    dev_g = abs(g - 1.0 / 504.0)
    a = -(2.0**5) * sums.lambert_sum_positive(ZERO, 2, PI, 1e-14).value
    dev_a = abs(a - 31.0 / 504.0)
    ok = dev_g <= 1e-12 and dev_a <= 1e-12
    _criterion(4, "Glaisher (1/504) and Apostol counterparts at 1e-12", ok,
               f"(devs {dev_g:.2e}, {dev_a:.2e})")


def test_criterion_05_zeta_p_closed_values():
    worst = 0.0
    for pv in (0.25, 1.0, 4.0):
        p = KoshParam.finite(pv)
        u = 1.0 / (PI * pv)
        closed0 = -0.5 * p.b0()
        closed2 = (PI**2 / 6.0) * (1 + 3 * u * (1 + u)) / (1 + u) ** 2
        worst = max(
            worst,
            abs(Z.zeta_p(p, 0.0, 1e-12, method="contour").value - closed0),
            abs(Z.zeta_p(p, 2.0, 1e-12, method="series").value - closed2),
            abs(Z.zeta_p(p, 2.0, 1e-12, method="contour").value - closed2),
        )
    ok = worst <= 1e-9
    _criterion(5, "zeta_p(0), zeta_p(2) closed forms at 1e-9", ok,
               f"(worst={worst:.2e})")


def test_criterion_06_functional_equation():
    worst = 0.0
    for s in (2.5, 3 + 1j, 4 - 2j):
        for pv in (0.5, 1.0, 5.0):
            r = I.verify_functional_eq(KoshParam.finite(pv), s, tol=1e-6)
            worst = max(worst, r.max_rel_dev)
            assert r.passed
    ok = worst <= 1e-6
    _criterion(6, "functional equation, contour path, rel 1e-6", ok,
               f"(worst rel={worst:.2e})")


def test_criterion_07_mellin():
    worst = 0.0
    for s in (2.0, 2.5, 3.0):
        r = I.verify_mellin(KoshParam.finite(1.0), s, tol=1e-8)
        worst = max(worst, r.max_rel_dev)
        assert r.passed
    ok = worst <= 1e-8
    _criterion(7, "Mellin identity at 1e-8", ok, f"(worst rel={worst:.2e})")


def test_criterion_08_ramanujan_grid():
    t0 = time.perf_counter()
    worst = 0.0
    for pv in (0.5, 1.0, 2.0, 10.0):
        p = KoshParam.finite(pv)
        for m in (-3, -2, 1, 2):
            for alpha in (PI / 2, PI, 1.3 * PI):
                r = I.verify_ramanujan_odd(p, m, alpha, tol=1e-8)
                worst = max(worst, r.max_abs_dev)
                assert r.passed, (pv, m, alpha)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-8 and elapsed <= 120.0
    _criterion(8, "odd-argument grid (48 combos) at 1e-8", ok,
               f"(worst={worst:.2e}, {elapsed:.1f}s)")


def test_criterion_09_bernoulli_consistency():
    worst = 0.0
    for pv in (0.5, 1.0, 5.0):
        p = KoshParam.finite(pv)
        for k in (1, 2, 3):
            integral = S.gen_bernoulli(p, k, 1e-11)
            zp = Z.zeta_p(p, 2.0 * k, 1e-13).value.real
            euler_type = (
                (-1.0) ** (k + 1) * 2.0 * math.factorial(2 * k) * zp
                / (2 * PI) ** (2 * k)
            )
            worst = max(worst, abs(integral - euler_type) / abs(euler_type))
    dev_inf = max(
        abs(S.gen_bernoulli(INFINITY, 1) - 1.0 / 6.0),
        abs(S.gen_bernoulli(INFINITY, 2) + 1.0 / 30.0),
    )
    ok = worst <= 1e-8 and dev_inf <= 1e-10
    _criterion(9, "generalized Bernoulli moment vs even-zeta route", ok,
               f"(worst rel={worst:.2e}, limit dev={dev_inf:.2e})")


def test_criterion_10_page220_family():
    worst = 0.0
    for pv in (1.0, 5.0):
        p = KoshParam.finite(pv)
        for alpha in (0.5, 1.0, 2.0):
            r = I.verify_page220(p, alpha, tol=1e-6)
            worst = max(worst, r.max_abs_dev)
            assert r.passed, (pv, alpha)
    # the p -> 0 corollary with tau-sums, checked against the literal display
    alpha = 2.0
    tau_sum = sums.phi_sum(ZERO, alpha, 1e-10)
    literal = math.sqrt(alpha) * (
        (S.EULER_GAMMA - math.log(PI * alpha)) / (2 * alpha) + tau_sum
    )
    r0 = I.verify_page220(ZERO, alpha, tol=1e-6)
    dev_literal = abs(r0.sides[0][1].real - literal)
    comb = I.verify_p220_combination(2.0, tol=1e-6)
    ok = (worst <= 1e-6 and r0.passed and dev_literal <= 1e-8 and comb.passed)
    _criterion(10, "page-220 family three-way at 1e-6 (+ combination)", ok,
               f"(worst={worst:.2e}, zero dev={r0.max_abs_dev:.2e})")


def test_criterion_11_F_dual_path():
    worst = 0.0
    t_max = 0.0
    for pv, n in (("1", 0.0), ("1", 0.3), ("inf", 0.0)):
        p = KoshParam.parse(pv)
        fr = I.F_p_real(p, n, 1e-9)
        fs, T = I.F_p_spectral(p, n, 1e-9)
        worst = max(worst, abs(fr - fs))
        t_max = max(t_max, T)
    ok = worst <= 1e-5 and t_max <= 60.0
    _criterion(11, "F dual-path (x-route vs spectral) at 1e-5", ok,
               f"(worst={worst:.2e}, T={t_max:.0f})")


def test_criterion_12_koshliakov_relations():
    worst = 0.0
    for p in (KoshParam.finite(1.0), ZERO):
        for a in (math.sqrt(PI), 1.0):
            r1 = I.verify_kosh_theta(p, a, tol=1e-5)
            r2 = I.verify_kosh_hardy(p, a, tol=1e-5)
            worst = max(worst, r1.max_abs_dev, r2.max_abs_dev)
            assert r1.passed and r2.passed, (p.label(), a)
    ok = worst <= 1e-5
    _criterion(12, "Gaussian-weighted relations three-way at 1e-5", ok,
               f"(worst={worst:.2e})")


def test_criterion_13_limit_interpolation():
    big, small = KoshParam.finite(1e6), KoshParam.finite(1e-6)
    devs_big = []
    devs_small = []
    for j in range(1, 11):
        devs_big.append(abs(eigen.solve_eigenvalue(big, j) - j))
        devs_small.append(abs(eigen.solve_eigenvalue(small, j) - (j - 0.5)))
        devs_big.append(abs(eigen.weight(big, eigen.solve_eigenvalue(big, j)) - 1))
        devs_small.append(abs(eigen.weight(small, eigen.solve_eigenvalue(small, j)) - 1))
    devs_big.append(abs(Z.zeta_p(big, 2.0).value.real - PI**2 / 6))
    devs_small.append(abs(Z.zeta_p(small, 2.0).value.real - 3 * PI**2 / 6))
    devs_big.append(abs(S.euler_const_1(big) - S.EULER_GAMMA))
    devs_small.append(abs(S.euler_const_1(small) - S.EULER_GAMMA - math.log(4)))
    devs_big.append(abs(S.euler_const_2(big) - S.EULER_GAMMA))
    devs_small.append(abs(S.euler_const_2(small) + math.log(2)))
    devs_big.append(abs(kernels.sigma_p(big, 1.0).real - 1 / (math.e - 1)))
    devs_small.append(
        abs(kernels.sigma_p(small, 1.0).real - 1 / (2 * math.sinh(0.5)))
    )
    devs_big.append(abs(S.capital_phi(big, 1.0) - 2 * S.classical_phi(1.0)))
    devs_small.append(abs(S.capital_phi(small, 1.0) - S.tau(1.0)))
    ok = max(devs_big) <= 1e-4 and max(devs_small) <= 1e-3
    _criterion(13, "limit interpolation at p = 1e6 / 1e-6", ok,
               f"(worst big={max(devs_big):.2e}, small={max(devs_small):.2e})")


def test_criterion_14_inequalities():
    r = I.verify_p220_combination(2.0, tol=1e-6)
    m1 = r.diagnostics["inequality1_margin"]
    m2 = r.diagnostics["inequality2_margin"]
    ok = m1 >= 1e-3 and m2 >= 1e-3
    _criterion(14, "digamma-series inequalities strict by 1e-3", ok,
               f"(margins {m1:.3f}, {m2:.3f})")


def test_criterion_15_property_suite(p1):
    t = eigen.build_table(p1, 64)
    j = np.arange(1, 65)
    brackets = np.all((t.lambdas > j - 0.5) & (t.lambdas < j))
    scale = np.maximum(1.0, np.abs(eigen.char_fn_prime(1.0, t.lambdas)))
    residuals = np.all(t.residuals <= scale * (1e-12 + 4e-16 * (1 + t.lambdas)))
    phi1_bound = all(
        abs(S.phi_1p(p1, x)) <= 1.0 / (12 * x * x) * (1 + 1e-9)
        for x in (0.5, 1.0, 3.0)
    )
    z2 = Z.zeta_p(p1, 2.0).value.real
    phi2_bound = all(
        abs(S.phi_2p(p1, x)) <= 2.0 * z2 / (x * x) * (1 + 1e-9)
        for x in (0.5, 1.0, 3.0)
    )
    xi_even = all(abs(Z.Xi_p(p1, t0) - Z.Xi_p(p1, -t0)) < 1e-14
                  for t0 in (0.5, 3.0, 9.0))
    xi_sym = all(
        abs(Z.xi_p(p1, s) - Z.xi_p(p1, 1 - s)) < 1e-10
        for s in (0.3, 0.2 + 1j, 0.8 + 2j)
    )
    eta_trivial = all(
        I.verify_eta_trivial(p1, k, tol=1e-7).passed for k in (1, 2)
    )
    ok = all((brackets, residuals, phi1_bound, phi2_bound, xi_even, xi_sym,
              eta_trivial))
    _criterion(15, "property suite (brackets, bounds, symmetry, trivials)", ok)
