"""Eigenvalues of the characteristic equation and the weighted-sum tail engine.

For finite ``p > 0`` the library is built on the positive roots ``lam_1 <
lam_2 < ...`` of ``p*sin(pi*lam) + lam*cos(pi*lam) = 0``, each sitting
strictly inside ``(j - 1/2, j)``, together with the weights

    w_j = (p**2 + lam_j**2) / (p*(p + 1/pi) + lam_j**2).

Two structural facts drive everything here:

* ``lam_j = j - arctan(lam_j/p)/pi``, which extends to a smooth, strictly
  increasing function ``lam(x)`` of a real index ``x``;
* ``w(lam(x)) = dlam/dx`` exactly, so weighted sums over eigenvalues are
  Riemann sums of ``phi(lam) dlam`` and admit Euler-Maclaurin tails with
  closed-form leading integrals.

In the boundary regimes the roots are exact: ``lam_j = j - 1/2`` at Zero and
``lam_j = j`` at Infinity, with unit weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .params import ConvergenceError, KoshParam

LARGE_J_THRESHOLD = 10_000


def char_fn(p: float, lam):
    """The characteristic function f(lam) = p*sin(pi*lam) + lam*cos(pi*lam)."""
    return p * np.sin(np.pi * lam) + lam * np.cos(np.pi * lam)


def char_fn_prime(p: float, lam):
    return (p * np.pi + 1.0) * np.cos(np.pi * lam) - np.pi * lam * np.sin(np.pi * lam)


def _bracket(p: float, j) -> tuple:
    eps = 1e-14 * j
    return j - 0.5 + eps, j - eps


def _asymptotic_root(p: float, j):
    return j - np.arctan(j / p) / np.pi


def solve_eigenvalue(p: KoshParam, j: int, tol: float = 1e-12) -> float:
    """j-th positive root of the characteristic equation.

    Bisection to width 1e-3 inside the certified bracket ``(j-1/2, j)``,
    then safeguarded Newton; iterates are clamped away from the endpoints,
    where one term of f vanishes identically.  For ``j`` beyond
    ``LARGE_J_THRESHOLD`` the asymptotic ``j - arctan(j/p)/pi`` refined by a
    single Newton step is already accurate to machine precision.
    """
    if j < 1:
        raise ValueError("root index must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if p.is_zero:
        return j - 0.5
    if p.is_infinity:
        return float(j)
    pv = p.p
    if j > LARGE_J_THRESHOLD:
        lam = _asymptotic_root(pv, j)
        lam -= char_fn(pv, lam) / char_fn_prime(pv, lam)
        return float(lam)
    if tol < 1e-18:
        raise ConvergenceError(f"tol={tol} below working precision")

    lo, hi = _bracket(pv, j)
    flo = char_fn(pv, lo)
    if flo * char_fn(pv, hi) >= 0:
        raise ConvergenceError(f"no sign change certificate for root {j} at p={pv}")
    while hi - lo > 1e-3:
        mid = 0.5 * (lo + hi)
        if char_fn(pv, mid) * flo <= 0:
            hi = mid
        else:
            lo = mid
            flo = char_fn(pv, lo)

    lam = 0.5 * (lo + hi)
    guard_lo, guard_hi = _bracket(pv, j)
    for _ in range(60):
        f = char_fn(pv, lam)
        fp = char_fn_prime(pv, lam)
        # one ulp of lam already moves f by |f'| * ulp; do not demand more
        scale = max(1.0, abs(fp))
        if abs(f) <= scale * (tol + 4e-16 * (1.0 + abs(lam))):
            return float(lam)
        if f * flo <= 0:
            hi = lam
        else:
            lo = lam
            flo = f
        step = f / fp if fp != 0 else hi - lo
        nxt = lam - step
        if not (lo < nxt < hi):  # Newton overshoot: fall back to bisection
            nxt = 0.5 * (lo + hi)
        lam = min(max(nxt, guard_lo), guard_hi)
    raise ConvergenceError(
        f"eigenvalue {j} did not reach |f| <= {tol} * scale at p={pv}; "
        "tolerance too tight for working precision"
    )


def lambda1(p: KoshParam) -> float:
    """The smallest eigenvalue; sets every series' slowest decay rate."""
    if p.is_zero:
        return 0.5
    if p.is_infinity:
        return 1.0
    return solve_eigenvalue(p, 1)


def weight(p: KoshParam, lam: float) -> float:
    """Coefficient (p^2+lam^2)/(p(p+1/pi)+lam^2) of the eigenvalue term.

    Computed as 1 - (p/pi)/(p(p+1/pi)+lam^2), which is exactly monotone in
    lam under float rounding and loses nothing to cancellation.
    """
    if p.is_zero or p.is_infinity:
        return 1.0
    pv = p.p
    return 1.0 - (pv / math.pi) / (pv * (pv + 1.0 / math.pi) + lam * lam)


def _roots_vector(pv: float, n: int, tol: float) -> np.ndarray:
    """Roots 1..n for finite p; vectorized bisection + clamped Newton."""
    j = np.arange(1, n + 1, dtype=float)
    small = j <= LARGE_J_THRESHOLD
    lam = _asymptotic_root(pv, j)

    if np.any(small):
        js = j[small]
        eps = 1e-14 * js
        lo = js - 0.5 + eps
        hi = js - eps
        flo = char_fn(pv, lo)
        for _ in range(9):  # width (1/2) / 2^9 < 1e-3
            mid = 0.5 * (lo + hi)
            fm = char_fn(pv, mid)
            take_hi = fm * flo <= 0
            hi = np.where(take_hi, mid, hi)
            lo = np.where(take_hi, lo, mid)
            flo = np.where(take_hi, flo, fm)
        x = 0.5 * (lo + hi)
        for _ in range(6):
            fx = char_fn(pv, x)
            fpx = char_fn_prime(pv, x)
            step = np.where(fpx != 0, fx / np.where(fpx == 0, 1.0, fpx), 0.0)
            x = np.clip(x - step, lo, hi)
        lam[small] = x

    big = ~small
    if np.any(big):
        lb = lam[big]
        lb = lb - char_fn(pv, lb) / char_fn_prime(pv, lb)
        lam[big] = lb

    resid = np.abs(char_fn(pv, lam))
    scale = np.maximum(1.0, np.abs(char_fn_prime(pv, lam)))
    bad = np.nonzero(resid > scale * (tol + 4e-16 * (1.0 + lam)))[0]
    p_obj = KoshParam("finite", pv)
    for idx in bad:  # rare; re-solve scalarly with the safeguarded loop
        lam[idx] = solve_eigenvalue(p_obj, int(idx) + 1, tol)
    return lam


@dataclass(frozen=True)
class EigenTable:
    """First ``count`` roots and weights for a fixed parameter; immutable."""

    p: KoshParam
    lambdas: np.ndarray
    weights: np.ndarray
    residuals: np.ndarray
    tol: float

    def __len__(self) -> int:
        return len(self.lambdas)


@lru_cache(maxsize=128)
def _build_cached(p: KoshParam, count: int, tol: float) -> EigenTable:
    if p.is_zero:
        lam = np.arange(1, count + 1, dtype=float) - 0.5
        w = np.ones(count)
        res = np.zeros(count)
    elif p.is_infinity:
        lam = np.arange(1, count + 1, dtype=float)
        w = np.ones(count)
        res = np.zeros(count)
    else:
        if tol < 1e-18:
            raise ConvergenceError(f"tol={tol} below working precision")
        lam = _roots_vector(p.p, count, tol)
        pv = p.p
        w = 1.0 - (pv / math.pi) / (pv * (pv + 1.0 / math.pi) + lam * lam)
        res = np.abs(char_fn(pv, lam))
        j = np.arange(1, count + 1)
        if not (np.all(lam > j - 0.5) and np.all(lam < j)):
            raise ConvergenceError(f"eigenvalue escaped its bracket at p={pv}")
        if not np.all(np.diff(lam) > 0):
            raise ConvergenceError(f"eigenvalues not strictly increasing at p={pv}")
        # strict increase saturates at the double-precision resolution of
        # w == 1 for very large j; the builder enforces the non-strict form
        if not (np.all(w > 0) and np.all(w < 1) and np.all(np.diff(w) >= 0)):
            raise ConvergenceError(f"weight monotonicity violated at p={pv}")
    for a in (lam, w, res):
        a.flags.writeable = False
    return EigenTable(p, lam, w, res, tol)


def build_table(p: KoshParam, count: int, tol: float = 1e-12) -> EigenTable:
    """Table of the first ``count`` roots/weights; cached and idempotent."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return _build_cached(p, int(count), float(tol))


def table_at_least(p: KoshParam, count: int, tol: float = 1e-12) -> EigenTable:
    """Like build_table but rounds ``count`` up to a power of two for cache reuse."""
    n = 1
    while n < count:
        n *= 2
    return build_table(p, max(n, 32), tol)


# ---------------------------------------------------------------------------
# Smooth index interpolation and Euler-Maclaurin tails
# ---------------------------------------------------------------------------

def lambda_index(pv: float, x: float) -> float:
    """The smooth root function lam(x) solving lam = x - arctan(lam/p)/pi."""
    lam = x - math.atan2(x, pv) / math.pi
    for _ in range(40):
        h = lam - x + math.atan2(lam, pv) / math.pi
        hp = 1.0 + (pv / math.pi) / (pv * pv + lam * lam)
        step = h / hp
        lam -= step
        if abs(step) < 1e-15 * (1.0 + abs(lam)):
            break
    return lam


def _lambda_x_derivatives(pv: float, lam: float):
    """(lam', lam'', lam''', lam'''') of lam(x), expressed through w(lam)."""
    D = pv * pv + pv / math.pi
    c = pv / math.pi
    s = D + lam * lam
    w = 1.0 - c / s
    w1 = 2.0 * c * lam / s**2
    w2 = 2.0 * c * (D - 3.0 * lam * lam) / s**3
    w3 = -24.0 * c * lam * (D - lam * lam) / s**4
    l1 = w
    l2 = w1 * w
    l3 = w2 * w * w + w1 * w1 * w
    l4 = w3 * w**3 + 4.0 * w2 * w1 * w * w + w1**3 * w
    return l1, l2, l3, l4


def em_weighted_tail(
    pv: float,
    start: int,
    phi: Callable[[float], complex],
    dphi: Callable[[float], complex],
    d2phi: Callable[[float], complex],
    d3phi: Callable[[float], complex],
    phi_integral: Callable[[float], complex],
) -> tuple[complex, float]:
    """Euler-Maclaurin value of ``sum_{j>=start} w_j * phi(lam_j)``.

    ``phi_integral(L)`` must equal ``integral_L^inf phi(lam) dlam`` (its
    analytic continuation is acceptable).  Returns (tail, error_estimate).
    """
    lam = lambda_index(pv, float(start))
    l1, l2, l3, l4 = _lambda_x_derivatives(pv, lam)
    f0 = phi(lam)
    f1 = dphi(lam)
    f2 = d2phi(lam)
    f3 = d3phi(lam)
    g = l1 * f0
    g1 = l2 * f0 + l1 * l1 * f1
    g3 = (
        l4 * f0
        + (4.0 * l1 * l3 + 3.0 * l2 * l2) * f1
        + 6.0 * l1 * l1 * l2 * f2
        + l1**4 * f3
    )
    c1 = -g1 / 12.0
    c2 = g3 / 720.0
    tail = phi_integral(lam) + 0.5 * g + c1 + c2
    if c1 != 0:
        err = abs(c2) * min(1.0, abs(c2) / abs(c1))
    else:
        err = abs(c2)
    return tail, err


def power_tail(pv: float, start: int, s: complex) -> tuple[complex, float]:
    """EM tail of ``sum_{j>=start} w_j * lam_j**(-s)`` (valid for Re s > -3)."""
    def phi(x):
        return x ** (-s)

    def dphi(x):
        return -s * x ** (-s - 1)

    def d2phi(x):
        return s * (s + 1) * x ** (-s - 2)

    def d3phi(x):
        return -s * (s + 1) * (s + 2) * x ** (-s - 3)

    def integral(x):
        return x ** (1 - s) / (s - 1)

    return em_weighted_tail(pv, start, phi, dphi, d2phi, d3phi, integral)


def exp_tail(pv: float, start: int, z: complex) -> tuple[complex, float]:
    """EM tail of ``sum_{j>=start} w_j * exp(-lam_j z)`` for Re z > 0."""
    def phi(x):
        return np.exp(-x * z)

    def dphi(x):
        return -z * np.exp(-x * z)

    def d2phi(x):
        return z * z * np.exp(-x * z)

    def d3phi(x):
        return -z**3 * np.exp(-x * z)

    def integral(x):
        return np.exp(-x * z) / z

    return em_weighted_tail(pv, start, phi, dphi, d2phi, d3phi, integral)
