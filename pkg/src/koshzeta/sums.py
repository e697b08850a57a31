"""Generalized Lambert-type sums and the Phi-sums of the modular relations.

The Lambert terms couple an eigenvalue power with the composite kernel,
``w_j lam_j^e / (sigma(lam_j a/pi) e^{2 a lam_j} - 1)``; their tails are
geometric with ratio roughly ``e^{-2a}`` per index, bounded through
``|1/(sigma(t) e^{2 pi t} - 1)| <= 1/(e^{2 pi t} - 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import eigen, kernels, special
from .params import KoshParam
from .quadrature import AutoHorizon, QuadSpec, integrate_semi_infinite

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class LambertSum:
    p: KoshParam
    exponent: int  # the power of lam_j in the summand
    scale: float   # the a in e^{2 a lam_j}
    value: float
    terms_used: int
    tail_bound: float


def _term_bound(lam: float, e: int, alpha: float) -> float:
    u = 2.0 * alpha * lam
    kb = 2.0 * math.exp(-u) if u > 1.0 else 1.0 / math.expm1(u)
    return lam**e * kb


def _lambert(p: KoshParam, exponent: int, alpha: float, eps: float) -> LambertSum:
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    e = int(exponent)

    if p.is_zero:
        total = 0.0
        j = 1
        while True:
            lam = j - 0.5
            term = -(lam**e) * kernels.fermi_kernel((2 * j - 1) * alpha)
            total += term
            bound = _term_bound(lam + 1.0, max(e, 0), alpha) / (
                1.0 - math.exp(-alpha)
            )
            if bound < eps and j >= 4:
                return LambertSum(p, e, alpha, total, j, bound)
            j += 1
            if j > 100_000:
                raise ArithmeticError("lambert sum (zero variant) stalled")

    if p.is_infinity:
        total = 0.0
        j = 1
        while True:
            u = 2.0 * alpha * j
            k = 1.0 / math.expm1(u) if u < 700 else math.exp(-u)
            total += j**e * k
            bound = _term_bound(j + 1.0, max(e, 0), alpha) / (1.0 - math.exp(-alpha))
            if bound < eps and j >= 4:
                return LambertSum(p, e, alpha, total, j, bound)
            j += 1
            if j > 100_000:
                raise ArithmeticError("lambert sum (infinity variant) stalled")

    lam1 = eigen.solve_eigenvalue(p, 1)
    n = max(4, math.ceil(math.log(1.0 / eps) / (2.0 * alpha * lam1)) + 10)
    while True:
        table = eigen.table_at_least(p, n + 1)
        lam = table.lambdas
        w = table.weights
        total = 0.0
        for j in range(n):
            total += w[j] * lam[j] ** e * kernels.inv_sigma_exp(p, lam[j] * alpha / math.pi)
        ratio = (1.0 + 1.0 / lam[n - 1]) ** max(e, 0) * math.exp(-alpha)
        bound = _term_bound(lam[n], e, alpha)
        if ratio < 1.0:
            bound /= 1.0 - ratio
        if ratio < 1.0 and bound < eps:
            return LambertSum(p, e, alpha, total, n, bound)
        n *= 2
        if n > 1 << 20:
            raise ArithmeticError("lambert sum truncation stalled")


def lambert_sum(p: KoshParam, m: int, alpha: float, eps: float = 1e-13) -> LambertSum:
    """sum_j w_j lam_j^{-2m-1} / (sigma(lam_j a/pi) e^{2 a lam_j} - 1).

    Zero variant: -sum (j-1/2)^{-2m-1}/(e^{(2j-1)a}+1); Infinity variant:
    sum j^{-2m-1}/(e^{2ja}-1).
    """
    return _lambert(p, -2 * m - 1, alpha, eps)


def lambert_sum_positive(
    p: KoshParam, m: int, alpha: float, eps: float = 1e-13
) -> LambertSum:
    """Same sum with the positive power lam_j^{2m+1} (m >= 0)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return _lambert(p, 2 * m + 1, alpha, eps)


# ---------------------------------------------------------------------------
# Phi-sums
# ---------------------------------------------------------------------------

def _g_alpha(u: float) -> float:
    """G(u) = 1/(e^u - 1) - 1/u + 1/2, the summed-poles factor."""
    return kernels.reg_exp_kernel(u).real + 0.5


def _g_alpha_over_u(u: float) -> float:
    """G(u)/u with the removable zero of G at the origin handled in series."""
    if u < 0.35:
        u2 = u * u
        return (
            1.0 / 12.0
            + u2 * (-1.0 / 720.0
                    + u2 * (1.0 / 30240.0
                            + u2 * (-1.0 / 1209600.0)))
        )
    return _g_alpha(u) / u


def _phi_sum_fused(p: KoshParam, alpha: float, eps: float) -> float:
    """-(2 pi / a) * int (sigma_p(2 pi t) + K(t)) G(2 pi t / a) dt.

    Near the origin the bracket is split into its regular part W_p plus the
    (1+B0)/(2 pi t) pole, whose product with G telescopes to (1+B0) G(u)/u.
    """
    b0 = p.b0()
    lam1 = eigen.lambda1(p)
    t_switch = 0.3 * alpha / _TWO_PI

    def integrand(t: float) -> float:
        u = _TWO_PI * t / alpha
        if t < t_switch:
            w = kernels.omega_kernel(p, t, eps / 10)
            return w * _g_alpha(u) + (1.0 + b0) * _g_alpha_over_u(u) / alpha
        bracket = (
            kernels.sigma_p(p, _TWO_PI * t, eps / 10).real
            + kernels.inv_sigma_exp(p, t)
        )
        return bracket * _g_alpha(u)

    rate = _TWO_PI * min(lam1, 1.0)
    spec = QuadSpec(
        abs_tol=eps * alpha / (4.0 * _TWO_PI),
        rel_tol=eps / 4,
        horizon=AutoHorizon(eps / 4, rate=rate),
        split_points=(t_switch,),
    )
    val = integrate_semi_infinite(integrand, spec).value.real
    return -(_TWO_PI / alpha) * val


def _phi_sum_terms(p: KoshParam, alpha: float, eps: float) -> float:
    """Term-by-term partial sums extrapolated in 1/N.

    Phi_p(x) expands in even powers of 1/x, so the partial sums S(N) admit
    S(N) = S - c1/N + c2/N^2 - ...; a four-point polynomial extrapolation
    removes the algebraic tail.  Kept as the independent cross-check of the
    fused-integral path.
    """
    ns = [64, 96, 128, 192]
    partials = []
    total = 0.0
    n_prev = 0
    for n in ns:
        for k in range(n_prev + 1, n + 1):
            total += special.capital_phi(p, k * alpha, eps)
        n_prev = n
        partials.append(total)
    # Neville extrapolation at h = 1/N -> 0
    hs = [1.0 / n for n in ns]
    vals = list(partials)
    for level in range(1, len(ns)):
        for i in range(len(ns) - level):
            vals[i] = vals[i + 1] + (vals[i + 1] - vals[i]) * hs[i + level] / (
                hs[i] - hs[i + level]
            )
    return vals[0]


def phi_sum(
    p: KoshParam, alpha: float, eps: float = 1e-10, path: str = "fused"
) -> float:
    """sum_{n>=1} Phi_p(n alpha); absolutely convergent (terms O(1/n^2)).

    The default path folds the sum into a single kernel integral; the
    "terms" path sums capital_phi directly and is retained only to
    cross-validate the fused form.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if path == "fused":
        return _phi_sum_fused(p, alpha, eps)
    if path == "terms":
        return _phi_sum_terms(p, alpha, eps)
    raise ValueError(f"unknown phi_sum path {path!r}")
