"""Certified double-precision evaluation of the Riemann-Siegel theta
function, in three variants.

All variants share the main terms ``(t/2) log(t/(2 pi e)) - pi/8`` and the
first ``k`` series terms.  They differ in the exponentially small
corrections:

* ``STANDARD`` omits the arctan correction; its radius must therefore carry
  an extra ``e^(-pi t)/2``.
* ``ARCTAN`` includes ``arctan(e^(-pi t))/2``; at the least-term index the
  attainable accuracy improves to the ``e^(-2 pi t)`` scale.
* ``EMPIRICAL`` further adds ``(pi t - k_min + 1/12) * T_min`` — an
  empirically fitted correction with no proven bound.  Its certified radius
  deliberately equals the ARCTAN radius (the improvement is advisory only,
  reported in ``advisory_correction``); the 1/12 constant is exposed as
  ``correction_constant`` for experimentation.

Negative ``t`` reduces by oddness before any series work; ``t = 0`` is the
exact special case: value 0, radius 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .bounds import BoundKind, Target, best_bound
from .errors import DomainError
from .fputil import FpAccumulator, up
from .series import TINY, k_min, partial_sum

__all__ = [
    "ThetaVariant",
    "ThetaResult",
    "eval_theta",
    "arctan_term",
    "re_rhat_identity",
]

_LOG_2PI = math.log(2.0 * math.pi)
_PI_OVER_8 = math.pi / 8.0
#: largest argument for which exp(-pi*t) is a nonzero double
_EXP_UNDERFLOW_T = 745.0 / math.pi


class ThetaVariant(str, Enum):
    STANDARD = "standard"
    ARCTAN = "arctan"
    EMPIRICAL = "empirical"


@dataclass(frozen=True)
class ThetaResult:
    t: float
    value: float
    radius: float
    k_used: int
    variant: ThetaVariant
    bound_kind: BoundKind | None = None
    flags: tuple[str, ...] = ()
    #: value of the empirical correction term (EMPIRICAL variant only)
    advisory_correction: float | None = None


def arctan_term(t: float) -> float:
    """``arctan(e^(-pi t)) / 2``; in (0, pi/8] for t >= 0, approaching
    pi/4 as t -> -inf."""
    t = float(t)
    try:
        a = math.exp(-math.pi * t)
    except OverflowError:
        return 0.25 * math.pi
    return 0.5 * math.atan(a)


def re_rhat_identity(t: float) -> float:
    """``-log(1 + e^(-2 pi t)) / 2``: the k-independent exact real part of
    the half-family remainder at purely imaginary argument ``i t``."""
    t = float(t)
    if t < 0.0:
        raise DomainError(f"identity requires t >= 0, got {t!r}")
    if t > _EXP_UNDERFLOW_T:
        return -0.0
    return -0.5 * math.log1p(math.exp(-2.0 * math.pi * t))


def _resolve_k(t: float, k) -> int:
    if k is None or k == "auto":
        return k_min(t).k_min
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"term count must be a positive integer or 'auto', got {k!r}")
    return k


def eval_theta(
    t: float,
    k: int | str | None = "auto",
    variant: ThetaVariant = ThetaVariant.ARCTAN,
    correction_constant: float = 1.0 / 12.0,
) -> ThetaResult:
    """Certified theta value at ``t``; ``k='auto'`` uses the least-term index.

    For t in (0, ~0.24] the series terms grow from the start, so auto mode
    uses k = 1 with the sqrt(pi k) bound — a documented low-accuracy regime.
    """
    t = float(t)
    variant = ThetaVariant(variant)
    if t == 0.0:
        return ThetaResult(
            t=0.0, value=0.0, radius=0.0, k_used=1, variant=variant,
            flags=("EXACT_ZERO",),
        )
    if t < 0.0:
        pos = eval_theta(-t, k, variant, correction_constant)
        advisory = (
            -pos.advisory_correction if pos.advisory_correction is not None else None
        )
        return replace(pos, t=t, value=-pos.value, advisory_correction=advisory)
    if math.isinf(t) or math.isnan(t):
        raise DomainError(f"t must be finite, got {t!r}")

    k_used = _resolve_k(t, k)
    fp = FpAccumulator()
    flags: list[str] = []

    main = 0.5 * t * (math.log(t) - _LOG_2PI - 1.0)
    fp.charge(max(abs(main), t, 1.0), ops=4)
    value = main - _PI_OVER_8
    value += partial_sum("theta", k_used, t)
    fp.charge(max(abs(value), 1.0), ops=k_used + 4)

    arctan_underflowed = t > _EXP_UNDERFLOW_T or math.exp(-math.pi * t) == 0.0
    if variant is not ThetaVariant.STANDARD:
        if arctan_underflowed:
            flags.append("UNDERFLOW_FOLDED")
        else:
            value += arctan_term(t)
            fp.charge(max(abs(value), 1.0), ops=2)

    advisory = None
    if variant is ThetaVariant.EMPIRICAL:
        report = k_min(t)
        advisory = (
            math.pi * t - report.k_min + correction_constant
        ) * report.t_min
        value += advisory
        fp.charge(max(abs(value), 1.0), ops=3)

    bound = best_bound(k_used, t, "theta", Target.R_KP1)
    radius = bound.value + fp.total
    if variant is ThetaVariant.STANDARD:
        if arctan_underflowed:
            radius += TINY
            flags.append("UNDERFLOW_FOLDED")
        else:
            radius += up(0.5 * math.exp(-math.pi * t), 2)
    elif arctan_underflowed:
        radius += TINY

    return ThetaResult(
        t=t,
        value=value,
        radius=radius,
        k_used=k_used,
        variant=variant,
        bound_kind=bound.kind,
        flags=tuple(flags),
        advisory_correction=advisory,
    )
