import math

import pytest

from koshzeta.params import KoshParam


@pytest.fixture(scope="session")
def p1():
    return KoshParam.finite(1.0)


@pytest.fixture(scope="session")
def p_half():
    return KoshParam.finite(0.5)


@pytest.fixture(scope="session")
def p5():
    return KoshParam.finite(5.0)


def char(p: float, lam: float) -> float:
    return p * math.sin(math.pi * lam) + lam * math.cos(math.pi * lam)


def bisect_root(p: float, j: int, iters: int = 90) -> float:
    """Plain interval bisection; the independent eigenvalue oracle."""
    lo, hi = j - 0.5 + 1e-12, j - 1e-12
    flo = char(p, lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if char(p, mid) * flo <= 0:
            hi = mid
        else:
            lo = mid
            flo = char(p, lo)
    return 0.5 * (lo + hi)
