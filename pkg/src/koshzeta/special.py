"""Generalized constants and gamma-type special functions.

Houses the two generalized Euler constants, the generalized Bernoulli
moments, the upper incomplete gamma, the log-derivatives of the two
gammamorphic functions (via their integral representations only), and the
classical digamma-based composites they degenerate to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from . import eigen, kernels
from .params import KoshParam
from .quadrature import AutoHorizon, FixedHorizon, QuadSpec, integrate_semi_infinite

Complex = Union[float, complex]

EULER_GAMMA = 0.5772156649015328606065120900824024
_TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# Classical pieces
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_fraction(n: int) -> Fraction:
    # B_0..B_n by the defining convolution; exact rationals
    row = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
    return row[0]


def bernoulli_number(n: int) -> float:
    """The classical Bernoulli number B_n (B_1 = -1/2 convention)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 1:
        return -0.5
    if n % 2 == 1:
        return 0.0
    return float(_bernoulli_fraction(n))


# six asymptotic terms after lifting to x >= 8 reach ~1e-13
_PSI_ASYM = [bernoulli_number(2 * k) / (2 * k) for k in range(1, 7)]


def classical_psi(x: float) -> float:
    """Digamma by recurrence lift to x >= 8 plus the asymptotic series."""
    if x <= 0 and x == math.floor(x):
        raise ArithmeticError(f"psi has a pole at x = {x}")
    if x < 0:
        # reflection; only reachable through exploratory use, not the library
        return classical_psi(1.0 - x) - math.pi / math.tan(math.pi * x)
    acc = 0.0
    while x < 8.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for coeff in _PSI_ASYM:
        series += coeff * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - series


def classical_phi(x: float) -> float:
    """phi(x) = psi(x) + 1/(2x) - log x; the page-220 building block."""
    if x <= 0:
        raise ValueError("x must be positive")
    return classical_psi(x) + 0.5 / x - math.log(x)


def tau(x: float) -> float:
    """The p -> 0 degeneration of the combined log-derivative correction."""
    if x <= 0:
        raise ValueError("x must be positive")
    return (
        0.5 * (classical_psi(1.0 + x / 2.0) - classical_psi((1.0 + x) / 2.0))
        + classical_psi(x + 0.5)
        - 0.5 / x
        - math.log(x)
    )


def omega_fn(x: float) -> float:
    """Omega(x) = 2 psi(2x) + psi(x/2) + 3/(2x) - 3 log x - log 2."""
    if x <= 0:
        raise ValueError("x must be positive")
    return (
        2.0 * classical_psi(2.0 * x)
        + classical_psi(x / 2.0)
        + 1.5 / x
        - 3.0 * math.log(x)
        - math.log(2.0)
    )


def incomplete_gamma_Q(mu: float, s: Complex) -> complex:
    """Q_mu(s) = int_mu^inf e^{-t} t^{s-1} dt for mu > 0 (upper incomplete)."""
    if mu <= 0:
        raise ValueError("mu must be positive")
    s = complex(s)
    sig = s.real
    T = math.log(1e16) + 40.0 * max(1.0, abs(sig))
    spec = QuadSpec(abs_tol=1e-14, rel_tol=1e-13, horizon=FixedHorizon(T, 1e-16))

    def f(u: float) -> complex:
        return math.exp(-u) * (mu + u) ** (s - 1.0)

    res = integrate_semi_infinite(f, spec)
    return math.exp(-mu) * res.value


def exp_scaled_E1(mu: float) -> float:
    """The fused quantity e^mu * Q_mu(0) = e^mu E_1(mu).

    Continued fraction for mu >= 1 (modified Lentz); power series otherwise.
    The fusion matters because the factors overflow/underflow separately for
    large mu while the product is ~ 1/mu.
    """
    if mu <= 0:
        raise ValueError("mu must be positive")
    if mu < 1.0:
        # E1(mu) = -gamma - log mu + sum (-1)^{k+1} mu^k / (k k!)
        total = -EULER_GAMMA - math.log(mu)
        term = 1.0
        for k in range(1, 60):
            term *= -mu / k
            total -= term / k
            if abs(term) < 1e-18 * (1.0 + abs(total)):
                break
        return math.exp(mu) * total
    # e^mu E1(mu) = 1/(mu+1- 1^2/(mu+3- 2^2/(mu+5- ...)))
    tiny = 1e-300
    b = mu + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for n in range(1, 300):
        a = -(n * n)
        b += 2.0
        d = 1.0 / (b + a * d)
        c = b + a / c
        if c == 0.0:
            c = tiny
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h
    raise ArithmeticError("continued fraction for e^mu E1(mu) stalled")


# ---------------------------------------------------------------------------
# Generalized Euler constants and Bernoulli moments
# ---------------------------------------------------------------------------

def euler_const_1(p: KoshParam, eps: float = 1e-11) -> float:
    """First generalized Euler constant, int_0^inf (sigma_p(t) - e^{-t}/t) dt.

    gamma at Infinity; gamma + log 4 at Zero.
    """
    if p.is_infinity:
        return EULER_GAMMA
    if p.is_zero:
        return EULER_GAMMA + math.log(4.0)
    lam1 = eigen.lambda1(p)
    rate = min(lam1, 1.0)

    def f(t: float) -> float:
        return kernels.sigma_p_reg(p, t, eps / 10).real - math.expm1(-t) / t

    spec = QuadSpec(abs_tol=eps / 4, rel_tol=eps / 4,
                    horizon=AutoHorizon(eps / 4, rate=rate))
    return integrate_semi_infinite(f, spec).value.real


def euler_const_2(p: KoshParam, eps: float = 1e-11) -> float:
    """Second generalized Euler constant via its regularized-kernel integral
    int_0^inf (1/(sigma(x/2pi) e^x - 1) - B0 e^{-x}/x) dx.

    gamma at Infinity; -log 2 at Zero.
    """
    if p.is_infinity:
        return EULER_GAMMA
    if p.is_zero:
        return -math.log(2.0)
    b0 = p.b0()

    def f(x: float) -> float:
        return kernels.inv_sigma_exp_reg(p, x / _TWO_PI) - b0 * math.expm1(-x) / x

    spec = QuadSpec(abs_tol=eps / 4, rel_tol=eps / 4,
                    horizon=AutoHorizon(eps / 4, rate=1.0))
    return integrate_semi_infinite(f, spec).value.real


def gen_bernoulli(p: KoshParam, k: int, eps: float = 1e-11) -> float:
    """Generalized Bernoulli number: B0 closed, else the sigma_p moment
    (-1)^{k+1} 4k int_0^inf x^{2k-1} sigma_p(2 pi x) dx.

    Limits: B_{2k} at Infinity and (2^{2k}-1) B_{2k} at Zero (k >= 1).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return p.b0()
    if p.is_infinity:
        return bernoulli_number(2 * k)
    if p.is_zero:
        return (4.0**k - 1.0) * bernoulli_number(2 * k)
    lam1 = eigen.lambda1(p)
    rate = _TWO_PI * lam1
    T0 = math.log(1.0 / eps) / rate
    T = (math.log(1.0 / eps) + (2 * k - 1) * math.log(max(T0, 2.0))) / rate + 2.0

    def f(x: float) -> float:
        return x ** (2 * k - 1) * kernels.sigma_p(p, _TWO_PI * x, eps / 10).real

    spec = QuadSpec(abs_tol=eps / 4, rel_tol=eps / 4, horizon=FixedHorizon(T, eps / 4))
    val = integrate_semi_infinite(f, spec).value.real
    return (-1.0) ** (k + 1) * 4.0 * k * val


@dataclass(frozen=True)
class GenConstants:
    """Bundle of the p-dependent constants used by the verifiers."""

    p: KoshParam
    c1: float
    c2: float
    bernoulli: tuple[float, ...]  # B_0^{(p)}, B_2^{(p)}, B_4^{(p)}, ...


def gen_constants(p: KoshParam, kmax: int, eps: float = 1e-11) -> GenConstants:
    bern = tuple(gen_bernoulli(p, k, eps) for k in range(kmax + 1))
    return GenConstants(p, euler_const_1(p, eps), euler_const_2(p, eps), bern)


# ---------------------------------------------------------------------------
# Gammamorphic log-derivatives (integral representations)
# ---------------------------------------------------------------------------

def phi_1p(p: KoshParam, x: float, eps: float = 1e-11) -> float:
    """phi_1(x) = -2 int_0^inf t dt / ((t^2+x^2)(sigma(t) e^{2 pi t} - 1)).

    Closed limits: psi(x+1/2) - log x at Zero; the classical phi at Infinity.
    Bounded by 1/(12 x^2) for every p.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    if p.is_zero:
        return classical_psi(x + 0.5) - math.log(x)
    if p.is_infinity:
        return classical_phi(x)

    def f(t: float) -> float:
        return t * kernels.inv_sigma_exp(p, t) / (t * t + x * x)

    spec = QuadSpec(abs_tol=eps / 4, rel_tol=eps / 4,
                    horizon=AutoHorizon(eps / 4, rate=_TWO_PI))
    return -2.0 * integrate_semi_infinite(f, spec).value.real


def psi_1p(p: KoshParam, x: float, eps: float = 1e-11) -> float:
    """Log-derivative of the first gammamorphic function."""
    if x <= 0:
        raise ValueError("x must be positive")
    return phi_1p(p, x, eps) - (1.0 - 0.5 * p.b0()) / x + math.log(x)


def phi_2p(p: KoshParam, x: float, eps: float = 1e-11) -> float:
    """phi_2(x) = -2 int_0^inf t sigma_p(2 pi t)/(t^2+x^2) dt.

    Closed limits: -1/(2x) + (psi(x/2+1) - psi((x+1)/2))/2 at Zero; the
    classical phi at Infinity.  Bounded by 2 zeta_p(2)/x^2.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    if p.is_zero:
        return -0.5 / x + 0.5 * (
            classical_psi(x / 2.0 + 1.0) - classical_psi((x + 1.0) / 2.0)
        )
    if p.is_infinity:
        return classical_phi(x)
    lam1 = eigen.lambda1(p)

    def f(t: float) -> float:
        return t * kernels.sigma_p(p, _TWO_PI * t, eps / 10).real / (t * t + x * x)

    spec = QuadSpec(abs_tol=eps / 4, rel_tol=eps / 4,
                    horizon=AutoHorizon(eps / 4, rate=_TWO_PI * lam1))
    return -2.0 * integrate_semi_infinite(f, spec).value.real


def psi_2p(p: KoshParam, x: float, eps: float = 1e-11) -> float:
    """Log-derivative of the second gammamorphic function.

    The e^{2 pi p} Q_{2 pi p}(0) pair is evaluated fused (exp_scaled_E1);
    the factors overflow separately already at moderate p.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    if p.is_zero:
        return phi_2p(p, x, eps) - 0.5 / x
    if p.is_infinity:
        return classical_psi(x)
    b0 = p.b0()
    return (
        phi_2p(p, x, eps)
        - 2.0 * exp_scaled_E1(_TWO_PI * p.p) * b0
        - 0.5 / x
        + b0 * math.log(x)
    )


def capital_phi(p: KoshParam, x: float, eps: float = 1e-11) -> float:
    """Phi_p = phi_1 + phi_2; equals tau(x) at Zero and 2 phi(x) at Infinity."""
    if x <= 0:
        raise ValueError("x must be positive")
    if p.is_zero:
        return tau(x)
    if p.is_infinity:
        return 2.0 * classical_phi(x)
    return phi_1p(p, x, eps) + phi_2p(p, x, eps)


def capital_phi_reg(p: KoshParam, x: float, eps: float = 1e-11) -> float:
    """Phi_p(x) + (1+B0)/(2x) = -2 int_0^inf t W_p(t)/(t^2+x^2) dt.

    The form actually integrated in the Gaussian-weighted relation; the
    rearrangement removes the 1/x cancellation near the origin (a log
    singularity in x remains, handled by the caller's substitution).
    """
    if x <= 0:
        raise ValueError("x must be positive")
    if p.is_zero:
        return tau(x) + 0.5 / x
    if p.is_infinity:
        # 2 phi(x) + 1/x = 2 psi(x+1) - 2 log x, stable at small x
        return 2.0 * (classical_psi(x + 1.0) - math.log(x))
    lam1 = eigen.lambda1(p)
    b0 = p.b0()

    def f(t: float) -> float:
        return t * kernels.omega_kernel(p, t, eps / 10) / (t * t + x * x)

    T = math.log(1.0 / eps) / (_TWO_PI * min(lam1, 1.0)) + 5.0
    spec = QuadSpec(abs_tol=eps / 4, rel_tol=eps / 4, horizon=FixedHorizon(T, eps / 4))
    val = integrate_semi_infinite(f, spec).value.real
    # beyond the horizon t W_p(t) == -(1+B0)/(2 pi) up to exponentially
    # small terms, leaving an exact arctan tail
    return -2.0 * val + (1.0 + b0) * math.atan2(x, T) / (math.pi * x)
