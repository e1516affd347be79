"""Floating-point helpers for certified (never under-reported) quantities.

Two concerns live here:

* upward rounding of bound values — a bound computed in doubles must never
  come out below the mathematical supremum it implements, so every operation
  chain is topped off with a relative guard factor;
* coarse accumulation of rounding error for evaluated values — each log and
  each term addition is charged a couple of ulps of the running magnitude,
  and the total is folded into the certified radius.
"""
from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "GUARD",
    "up",
    "ceil_float",
    "log_abs_fraction",
    "FpAccumulator",
]

#: Relative guard applied per floating operation chain when rounding a bound
#: upward.  2^-40 is ~4000x a double ulp: far above any realistic chain error,
#: far below any margin that matters to a truncation bound.
GUARD = 1.0 + 2.0 ** -40


def up(x: float, chains: int = 1) -> float:
    """Round ``x >= 0`` upward by one guard factor per operation chain."""
    for _ in range(chains):
        x *= GUARD
    return x


def ceil_float(value: Fraction | int) -> float:
    """Smallest double >= the exact ``value`` (+inf if out of range)."""
    try:
        f = float(value)
    except OverflowError:
        return math.inf
    if math.isinf(f):
        return f
    if Fraction(f) >= value:
        return f
    return math.nextafter(f, math.inf)


def log_abs_fraction(value: Fraction) -> float:
    """``log|value|`` for an exact rational of any size.

    ``math.log`` accepts arbitrary-size ints, so this never overflows even
    when ``float(value)`` would.
    """
    if value == 0:
        raise ValueError("log of zero")
    num = abs(value.numerator)
    return math.log(num) - math.log(value.denominator)


class FpAccumulator:
    """Coarse rounding-error budget for a double-precision evaluation.

    The policy (documented with the certified evaluators): every log
    evaluation and every term addition contributes 2 ulp of the running
    magnitude; argument perturbations from shift arithmetic are charged at
    the same rate.  Callers may charge extra ulps for known-sloppier steps.
    """

    def __init__(self) -> None:
        self.total = 0.0

    def charge(self, magnitude: float, ops: int = 1, ulps: int = 2) -> None:
        mag = abs(magnitude)
        if not math.isfinite(mag):
            return
        self.total += ops * ulps * math.ulp(max(mag, 1e-300))
