"""Adaptive quadrature for the semi-infinite and vertical-line integrals.

All integrands in this library decay like ``exp(-c*t)`` or ``exp(-c*t**2)``
beyond some horizon, so integration happens on a finite window ``(0, T]``
chosen from an analytic tail bound, refined by adaptive Gauss-Kronrod
(G7/K15) bisection.  Integrands with a removable 0/0 at the origin must be
regularized by the caller, either algebraically or through ``series_patch``.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .params import ConvergenceError

# 15-point Kronrod nodes on [-1, 1] (positive half) and weights, with the
# embedded 7-point Gauss weights; values from the classic QUADPACK tables.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


class QuadratureError(ConvergenceError):
    """Subdivision budget exhausted or a non-finite integrand sample."""


@dataclass(frozen=True)
class FixedHorizon:
    """Truncate at a caller-chosen ``T``; ``tail_bound`` is added to the error."""

    T: float
    tail_bound: float = 0.0

    def resolve(self) -> tuple[float, float]:
        return self.T, self.tail_bound


@dataclass(frozen=True)
class AutoHorizon:
    """Pick ``T`` so that ``scale * exp(-rate * T**power) <= eps``.

    ``rate`` and ``power`` describe the integrand's decay class
    (``power=1`` for exponential, ``power=2`` for Gaussian tails).
    """

    eps: float
    rate: float
    power: float = 1.0
    scale: float = 1.0

    def resolve(self) -> tuple[float, float]:
        if self.eps <= 0 or self.rate <= 0:
            raise ValueError("AutoHorizon requires eps > 0 and rate > 0")
        t = (math.log(self.scale / self.eps) / self.rate) ** (1.0 / self.power)
        return max(t, 1.0), self.eps


HorizonPolicy = Union[FixedHorizon, AutoHorizon]


@dataclass(frozen=True)
class QuadSpec:
    """Quadrature configuration shared by all integral evaluations."""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 4000
    horizon: HorizonPolicy = AutoHorizon(1e-13, rate=1.0)
    split_points: tuple[float, ...] = ()

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


@dataclass
class QuadResult:
    value: complex
    abs_err_estimate: float
    nodes_used: int
    truncation_T: float

    @property
    def real(self) -> float:
        return self.value.real


def _kronrod(f: Callable[[float], complex], a: float, b: float):
    """One G7/K15 panel on [a, b]; returns (k15, |k15-g7|)."""
    h = 0.5 * (b - a)
    c = 0.5 * (a + b)

    def sample(x: float) -> complex:
        try:
            return complex(f(x))
        except (ZeroDivisionError, OverflowError) as exc:
            raise QuadratureError(
                f"non-finite integrand sample at x={x:.6g}; "
                "missing singularity regularization upstream"
            ) from exc

    fc = sample(c)
    k15 = _WGK[7] * fc
    g7 = _WG[3] * fc
    for i in range(7):
        x = h * _XGK[i]
        s = sample(c - x) + sample(c + x)
        k15 += _WGK[i] * s
        if i % 2 == 1:
            g7 += _WG[(i - 1) // 2] * s
    k15 *= h
    g7 *= h
    if not (math.isfinite(k15.real) and math.isfinite(k15.imag)):
        raise QuadratureError(
            f"non-finite integrand sample in [{a:.6g}, {b:.6g}]; "
            "missing singularity regularization upstream"
        )
    return k15, abs(k15 - g7)


def integrate_interval(
    f: Callable[[float], complex],
    a: float,
    b: float,
    spec: QuadSpec,
    interior_splits: Sequence[float] = (),
) -> QuadResult:
    """Adaptive G7/K15 integration of ``f`` over the finite interval [a, b]."""
    if b <= a:
        return QuadResult(0.0 + 0.0j, 0.0, 0, b)
    breaks = sorted({a, b, *(x for x in interior_splits if a < x < b)})
    # Seed with a geometric ladder toward the right end so that a single wide
    # panel cannot hide an exponentially localized integrand from the
    # error estimator.
    seeded = [breaks[0]]
    for left, right in zip(breaks, breaks[1:]):
        w = right - left
        x = left
        step = max(w / 16.0, min(1.0, w))
        while x + step < right:
            x += step
            seeded.append(x)
            step *= 2.0
        seeded.append(right)

    heap = []
    total = 0.0 + 0.0j
    err = 0.0
    nodes = 0
    for left, right in zip(seeded, seeded[1:]):
        val, e = _kronrod(f, left, right)
        nodes += 15
        total += val
        err += e
        heapq.heappush(heap, (-e, left, right, val))

    splits = 0
    stuck_err = 0.0
    while heap:
        target = max(spec.abs_tol, spec.rel_tol * abs(total))
        if err <= 0.5 * target + stuck_err:
            break
        if splits >= spec.max_subdivisions:
            raise QuadratureError(
                f"subdivision budget {spec.max_subdivisions} exhausted; "
                f"err={err:.3g} target={target:.3g} on [{a:.3g}, {b:.3g}]"
            )
        neg_e, left, right, val = heapq.heappop(heap)
        e = -neg_e
        mid = 0.5 * (left + right)
        if mid <= left or mid >= right or (right - left) < 1e-15 * (1.0 + abs(mid)):
            # cannot refine further at working precision
            stuck_err += e
            continue
        v1, e1 = _kronrod(f, left, mid)
        v2, e2 = _kronrod(f, mid, right)
        nodes += 30
        splits += 1
        total += (v1 + v2) - val
        err += (e1 + e2) - e
        heapq.heappush(heap, (-e1, left, mid, v1))
        heapq.heappush(heap, (-e2, mid, right, v2))

    return QuadResult(total, err, nodes, b)


def integrate_semi_infinite(
    f: Callable[[float], complex],
    spec: QuadSpec,
    series_patch: Optional[Callable[[float], complex]] = None,
    patch_cutoff: float = 1e-3,
) -> QuadResult:
    """Integrate ``f`` over (0, inf), truncated at the configured decay horizon.

    ``series_patch``, when given, replaces ``f`` on ``(0, patch_cutoff)``;
    it must be the closed-form expansion of an integrand whose direct
    evaluation suffers 0/0 cancellation at the origin.
    """
    T, tail = spec.horizon.resolve()
    g = f
    splits = list(spec.split_points)
    if series_patch is not None:
        def g(x, _f=f, _p=series_patch, _c=patch_cutoff):
            return _p(x) if x < _c else _f(x)

        splits.append(patch_cutoff)
    res = integrate_interval(g, 0.0, T, spec, interior_splits=splits)
    res.abs_err_estimate += tail
    res.truncation_T = T
    return res


def integrate_vertical_line(
    g: Callable[[float], complex],
    spec: QuadSpec,
) -> QuadResult:
    """Integrate a parametrized vertical-line integrand over y in (0, inf).

    The caller has already folded the direction and ``dz`` factor into
    ``g(y)``; the remaining task is identical to a decaying half-line
    integral with complex values.
    """
    return integrate_semi_infinite(g, spec)
