"""Deformation parameter handling.

The whole library is parameterized by a single positive real ``p``.  The two
boundary regimes ``p -> 0`` and ``p -> infinity`` are first-class citizens:
every quantity in the library has a closed form there, and all dependent
computations route to those closed forms instead of taking numerical limits.
"""

from __future__ import annotations

from dataclasses import dataclass

# Above this the eigenvalues differ from integers by less than double
# precision can resolve, so the infinite-p closed forms are exact.
LARGE_P_CUTOFF = 1e8


class PoleError(ArithmeticError):
    """Evaluation requested exactly at a pole of the target function."""


class ConvergenceError(ArithmeticError):
    """An iteration or truncation failed to reach the requested tolerance."""


@dataclass(frozen=True)
class KoshParam:
    """The deformation parameter: ``Finite(p > 0)``, ``Zero`` or ``Infinity``."""

    kind: str  # "finite" | "zero" | "infinity"
    p: float = 0.0

    def __post_init__(self):
        if self.kind not in ("finite", "zero", "infinity"):
            raise ValueError(f"unknown parameter kind {self.kind!r}")
        if self.kind == "finite":
            if not (self.p > 0.0) or self.p != self.p or self.p == float("inf"):
                raise ValueError("finite parameter requires 0 < p < inf")

    @staticmethod
    def finite(p: float) -> "KoshParam":
        p = float(p)
        if p >= LARGE_P_CUTOFF:
            return INFINITY
        return KoshParam("finite", p)

    @staticmethod
    def parse(text: str) -> "KoshParam":
        """Parse a CLI/API argument: a positive decimal, ``zero`` or ``inf``."""
        t = str(text).strip().lower()
        if t in ("zero", "0"):
            return ZERO
        if t in ("inf", "infinity", "oo"):
            return INFINITY
        return KoshParam.finite(float(t))

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"

    @property
    def is_infinity(self) -> bool:
        return self.kind == "infinity"

    def b0(self) -> float:
        """The constant 1/(1 + 1/(pi*p)); equals 0 at Zero and 1 at Infinity."""
        import math

        if self.is_zero:
            return 0.0
        if self.is_infinity:
            return 1.0
        return 1.0 / (1.0 + 1.0 / (math.pi * self.p))

    def label(self) -> str:
        if self.is_zero:
            return "zero"
        if self.is_infinity:
            return "inf"
        return repr(self.p)

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return f"p={self.label()}"


ZERO = KoshParam("zero")
INFINITY = KoshParam("infinity")
