"""The structural kernels: the ratio sigma(z), the eigen-exponential sum
sigma_p(z), and the composite kernel 1/(sigma(t)e^{2 pi t} - 1).

Every origin-sensitive combination used by the integral representations is
exposed in a regularized form (the function minus its pole term), computed
without subtractive cancellation.  These regularized kernels are what the
quadrature layer consumes as "series patches" near 0.
"""

from __future__ import annotations

import math
from typing import Union

import numpy as np

from . import eigen
from .params import KoshParam, PoleError

Complex = Union[float, complex]

_TWO_PI = 2.0 * math.pi


def cexpm1(z: Complex) -> Complex:
    """exp(z) - 1, stable near 0 for real or complex arguments."""
    if isinstance(z, complex):
        if abs(z) < 1e-5:
            return z * (1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0)))
        return np.exp(z) - 1.0
    return math.expm1(z)


def _expm1_minus(u: float) -> float:
    """exp(u) - 1 - u for u >= 0, without cancellation at small u."""
    if u < 0.25:
        term = u * u / 2.0
        total = term
        k = 3
        while True:
            term *= u / k
            total += term
            if term < 1e-18 * (1.0 + total):
                return total
            k += 1
    return math.expm1(u) - u


def reg_exp_kernel(z: Complex) -> Complex:
    """1/(e^z - 1) - 1/z; the regularized limit kernel at p = Infinity."""
    az = abs(z)
    if az == 0.0:
        return -0.5
    if not isinstance(z, complex) and z > 700.0:
        return -1.0 / z
    if az < 0.35:
        # 1/(e^z-1) = 1/z - 1/2 + sum B_{2k} z^{2k-1}/(2k)!
        z2 = z * z
        return (
            -0.5
            + z * (1.0 / 12.0
                   + z2 * (-1.0 / 720.0
                           + z2 * (1.0 / 30240.0
                                   + z2 * (-1.0 / 1209600.0
                                           + z2 * (1.0 / 47900160.0)))))
        )
    return 1.0 / cexpm1(z) - 1.0 / z


def fermi_kernel(z: Complex) -> Complex:
    """1/(e^z + 1), smooth on the whole positive axis."""
    if isinstance(z, complex) or z < 700.0:
        return 1.0 / (np.exp(z) + 1.0)
    return math.exp(-z)


def sigma_ratio(p: KoshParam, z: Complex) -> Complex:
    """The ratio kernel (p+z)/(p-z); 1 at Infinity, -1 at Zero."""
    if p.is_infinity:
        return 1.0
    if p.is_zero:
        return -1.0
    if z == p.p:
        raise PoleError(f"sigma ratio has a pole at z = p = {p.p}")
    return (p.p + z) / (p.p - z)


def _finite_sigma_sum(p: KoshParam, z: Complex, eps: float):
    """(sum_{j<M} w_j e^{-lam_j z}, EM tail handle M); shared head logic."""
    rez = z.real if isinstance(z, complex) else z
    if rez <= 0:
        raise ValueError("sigma_p requires Re z > 0")
    M = 64
    while True:
        table = eigen.table_at_least(p, M)
        lam = table.lambdas[: M - 1]
        w = table.weights[: M - 1]
        head = np.sum(w * np.exp(-lam * z))
        tail, err = eigen.exp_tail(p.p, M, z)
        if err <= eps or M >= 4096:
            return head, tail, err, M
        M *= 2


def sigma_p(p: KoshParam, z: Complex, eps: float = 1e-13) -> Complex:
    """The eigen-exponential sum  sum_j w_j exp(-lam_j z)  for Re z > 0.

    Reduces to 1/(e^z - 1) at Infinity and to 1/(2 sinh(z/2)) at Zero.
    """
    rez = z.real if isinstance(z, complex) else z
    if rez <= 0:
        raise ValueError("sigma_p requires Re z > 0")
    if p.is_infinity:
        return 1.0 / cexpm1(z)
    if p.is_zero:
        return 1.0 / cexpm1(z) + fermi_kernel(z / 2.0)
    head, tail, _, _ = _finite_sigma_sum(p, z, eps)
    return head + tail


def sigma_p_reg(p: KoshParam, z: Complex, eps: float = 1e-13) -> Complex:
    """sigma_p(z) - 1/z, stable uniformly down to z -> 0+.

    The 1/z pole is cancelled analytically inside the Euler-Maclaurin tail
    (whose leading integral is exp(-lam z)/z), leaving expm1-level accuracy
    instead of catastrophic subtraction.
    """
    rez = z.real if isinstance(z, complex) else z
    if rez <= 0:
        raise ValueError("sigma_p_reg requires Re z > 0")
    if p.is_infinity:
        return reg_exp_kernel(z)
    if p.is_zero:
        return reg_exp_kernel(z) + fermi_kernel(z / 2.0)
    M = 64
    while True:
        table = eigen.table_at_least(p, M)
        lam = table.lambdas[: M - 1]
        w = table.weights[: M - 1]
        head = np.sum(w * np.exp(-lam * z))

        def integral(L, _z=z):
            return cexpm1(-L * _z) / _z

        tail, err = eigen.em_weighted_tail(
            p.p,
            M,
            lambda x: np.exp(-x * z),
            lambda x: -z * np.exp(-x * z),
            lambda x: z * z * np.exp(-x * z),
            lambda x: -z**3 * np.exp(-x * z),
            integral,
        )
        if err <= eps or M >= 4096:
            return head + tail
        M *= 2


def inv_sigma_exp(p: KoshParam, t: float) -> float:
    """The composite kernel 1/(sigma(t) e^{2 pi t} - 1) for t > 0.

    Evaluated as (p-t)/((p+t)e^{2 pi t} - (p-t)); the denominator never
    vanishes on the positive axis.  Limits: 1/(e^{2 pi t}-1) at Infinity,
    -1/(e^{2 pi t}+1) at Zero.
    """
    if t <= 0:
        raise PoleError("composite kernel has a simple pole at t = 0")
    u = _TWO_PI * t
    if p.is_infinity:
        return 1.0 / math.expm1(u) if u < 700 else math.exp(-u)
    if p.is_zero:
        return -fermi_kernel(u)
    pv = p.p
    if u > 350.0:
        e = math.exp(-u)
        return e * (pv - t) / ((pv + t) - (pv - t) * e) if u < 745 else 0.0
    E = math.expm1(u)
    return (pv - t) / ((pv + t) * E + 2.0 * t)


def inv_sigma_exp_reg(p: KoshParam, t: float) -> float:
    """inv_sigma_exp(t) - B0/(2 pi t), stable down to t -> 0+ (limit -1/2)."""
    if t <= 0:
        raise ValueError("inv_sigma_exp_reg requires t > 0")
    if p.is_infinity:
        return reg_exp_kernel(_TWO_PI * t)
    if p.is_zero:
        return -fermi_kernel(_TWO_PI * t)
    if t > 0.5:
        return inv_sigma_exp(p, t) - p.b0() / (_TWO_PI * t)
    # exact rearrangement: all bracketed terms share one sign, so no
    # cancellation survives:  reg = -(2 pi t^2 (1+B0) + B0 (p+t) R) / (2 pi t D)
    pv = p.p
    u = _TWO_PI * t
    b0 = p.b0()
    R = _expm1_minus(u)
    E = R + u
    D = (pv + t) * E + 2.0 * t
    num = _TWO_PI * t * t * (1.0 + b0) + b0 * (pv + t) * R
    return -num / (_TWO_PI * t * D)


def inv_sigma_exp_series(p: KoshParam, t: float, eps: float = 1e-15) -> float:
    """Geometric-series evaluation sum_k ((p-t)/(p+t))^k e^{-2 pi k t}.

    Independent of the rational formula; kept as a cross-validation path.
    """
    if t <= 0:
        raise PoleError("composite kernel has a simple pole at t = 0")
    if p.is_infinity:
        r = 1.0
    elif p.is_zero:
        r = -1.0
    else:
        r = (p.p - t) / (p.p + t)
    q = r * math.exp(-_TWO_PI * t)
    if abs(q) >= 1.0:
        raise ValueError("geometric ratio not contracting")
    term = q
    total = 0.0
    for _ in range(100_000):
        total += term
        term *= q
        if abs(term) < eps * (1.0 + abs(total)):
            return total
    raise ValueError("geometric series failed to converge")


def omega_kernel(p: KoshParam, t: float, eps: float = 1e-13) -> float:
    """sigma_p(2 pi t) + inv_sigma_exp(t) - (1+B0)/(2 pi t), regular at 0.

    This is the Mellin partner of 2 Gamma(s) omega_p(s) / (2 pi)^s on
    0 < Re s < 1 and the bracket shared by the Gaussian-weighted and
    F-type integral identities.
    """
    return sigma_p_reg(p, _TWO_PI * t, eps).real + inv_sigma_exp_reg(p, t)
