"""Certified double-precision evaluation of lngamma(z) and lngamma(z+1/2).

A result is a value plus a radius that contains the truth: radius =
(proven truncation bound at the shifted argument) + (coarse accumulated
floating-point noise).  The evaluation plan is: shift the argument up by the
recurrence until its modulus reaches max(k, 1) — this keeps the quadratic
bounds applicable and kills any truncation floor — sum k series terms plus
the main terms there, then subtract the shift logs.  Arguments left of the
imaginary axis go through the reflection identity
``Gamma(z) Gamma(-z) = -pi / (z sin(pi z))`` first.

Branch policy: all logs are principal; the reflected assembly fixes its
2-pi-i multiple against a cheap shift-route estimate of the imaginary part
(always accurate to ~0.1, far below the pi resolution needed), so reported
imaginary parts are the continuous ones, never reduced mod 2 pi.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import bernoulli as _bernoulli_mod
from .bounds import BoundKind, Target, best_bound
from .errors import AccuracyError, DomainError, ResourceLimitError
from .fputil import FpAccumulator
from .series import partial_sum

__all__ = [
    "CertifiedValue",
    "TruncationPlan",
    "eval_lngamma",
    "eval_lngamma_half",
    "choose_k",
]

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)
_TWO_PI = 2.0 * math.pi
#: Hard cap on series terms (Bernoulli index 2k stays under the table cap).
_K_CAP = _bernoulli_mod.MAX_INDEX // 2 - 1


@dataclass(frozen=True)
class TruncationPlan:
    """How a certified value was produced: terms, shifts, winning bound."""

    k: int
    shifts: int
    bound_kind: BoundKind
    truncation_bound: float


@dataclass(frozen=True)
class CertifiedValue:
    """Value and a radius guaranteed to contain the true function value."""

    value: complex
    radius: float
    plan: TruncationPlan
    flags: tuple[str, ...] = ()


def _on_cut(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0


def _count_shifts(z: complex, modulus: float) -> int:
    s = 0
    w = z
    while abs(w) < modulus:
        w += 1.0
        s += 1
        if s > 10_000_000:
            raise ResourceLimitError("shift count exceeds supported range")
    return s


def _family_context(family: str) -> str:
    return "stirling" if family == "stirling" else "gauss"


def _eval_right(z: complex, k: int, family: str) -> CertifiedValue:
    """Shift-sum-subtract evaluation, valid for Re(z) >= 0 off the origin
    issue (the shifted argument is never 0)."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"term count must be a positive integer, got {k!r}")
    if k > _K_CAP:
        raise ResourceLimitError(
            f"term count {k} exceeds the Bernoulli-table cap ({_K_CAP})"
        )
    fp = FpAccumulator()
    modulus = float(max(k, 1))
    offset = 0.0 if family == "stirling" else 0.5
    w = z
    shifts = 0
    log_sum = complex(0.0, 0.0)
    while abs(w) < modulus:
        lw = cmath.log(w + offset)
        log_sum += lw
        # One log, one add, plus the rounding of the shifted argument itself.
        fp.charge(max(abs(log_sum), abs(lw), 1.0), ops=2, ulps=4)
        w += 1.0
        shifts += 1

    logw = cmath.log(w)
    if family == "stirling":
        main = (w - 0.5) * logw - w + _HALF_LOG_2PI
    else:
        main = w * logw - w + _HALF_LOG_2PI
    fp.charge(max(abs(main), abs(w) * abs(logw), 1.0), ops=6)

    terms = partial_sum(family, k, w)
    value = main + terms - log_sum
    # k term additions plus assembly; terms carry <= ~3 ulp each relative
    # to their own (geometrically decaying) magnitudes.
    fp.charge(max(abs(value), abs(main), 1.0), ops=k + 6)

    bound = best_bound(k, w, _family_context(family), Target.R_KP1)
    radius = bound.value + fp.total
    plan = TruncationPlan(
        k=k, shifts=shifts, bound_kind=bound.kind, truncation_bound=bound.value
    )
    return CertifiedValue(value=value, radius=radius, plan=plan)


def _imag_estimate(z: complex) -> float:
    """Continuous Im(lngamma(z)) to ~0.1 absolute, via the shift route with
    main terms only.  Used solely to pin the 2-pi-i multiple."""
    n = 0
    w = z
    im_logs = 0.0
    while w.real < 1.0 or abs(w) < 2.0:
        im_logs += cmath.log(w).imag
        w += 1.0
        n += 1
    main = (w - 0.5) * cmath.log(w) - w
    return main.imag - im_logs


def _reflect(z: complex, inner: CertifiedValue) -> CertifiedValue:
    """Assemble lngamma(z) for Re(z) < 0 from lngamma(-z)."""
    fp = FpAccumulator()
    log_z = cmath.log(z)
    log_sin = _log_sin_pi(z)
    raw = complex(_LOG_PI, math.pi) - log_z - log_sin - inner.value
    fp.charge(max(abs(raw), abs(log_sin), math.pi * abs(z), 1.0), ops=10)
    m = round((_imag_estimate(z) - raw.imag) / _TWO_PI)
    value = raw + complex(0.0, _TWO_PI * m)
    radius = inner.radius + fp.total
    return CertifiedValue(
        value=value,
        radius=radius,
        plan=inner.plan,
        flags=inner.flags + ("REFLECTED",),
    )


def _log_sin_pi(z: complex) -> complex:
    """log(sin(pi z)) stable for any imaginary part (branch fixed later)."""
    y = z.imag
    if abs(y) <= 20.0:
        return cmath.log(cmath.sin(math.pi * z))
    if y > 0:
        tail = cmath.log(1.0 - cmath.exp(2j * math.pi * z))
        return complex(-math.log(2.0), 0.5 * math.pi) - 1j * math.pi * z + tail
    tail = cmath.log(1.0 - cmath.exp(-2j * math.pi * z))
    return complex(-math.log(2.0), -0.5 * math.pi) + 1j * math.pi * z + tail


def _fp_floor(z: complex) -> float:
    """Conservative lower limit on any achievable radius at ``z``: the
    rounding noise of the assembled value alone."""
    w = z
    guard = 0
    while abs(w) < 1.0:
        w += 1.0
        guard += 1
        if guard > 10_000_000:
            break
    scale = abs((w - 0.5) * cmath.log(w) - w) + abs(z) + 1.0
    return 32.0 * math.ulp(scale)


def choose_k(z: complex, eps: float, context: str = "stirling") -> TruncationPlan:
    """Smallest k (with its shift count) whose truncation bound meets eps.

    Deterministic upward scan under the shift rule |z'| >= max(k, 1).
    Raises an accuracy error, reporting the best achievable radius, when eps
    is below the floating-point floor or beyond the Bernoulli cap's reach.
    """
    if not (eps > 0.0):
        raise DomainError(f"target accuracy must be positive, got {eps!r}")
    if context not in ("stirling", "gauss"):
        raise DomainError(f"unknown truncation context {context!r}")
    floor = _fp_floor(z)
    best_value = math.inf
    if eps >= floor:
        for k in range(1, _K_CAP + 1):
            modulus = float(max(k, 1))
            shifts = _count_shifts(z, modulus)
            w = z + shifts
            bound = best_bound(k, w, context, Target.R_KP1)
            best_value = min(best_value, bound.value)
            if bound.value <= eps:
                return TruncationPlan(
                    k=k, shifts=shifts, bound_kind=bound.kind,
                    truncation_bound=bound.value,
                )
    best_radius = floor + (best_value if math.isfinite(best_value) else 0.0)
    raise AccuracyError(
        f"target accuracy {eps:g} is unattainable (best achievable radius "
        f"~{best_radius:.3g})",
        best_radius=best_radius,
    )


def _default_accuracy(z: complex, family: str) -> float:
    """Default truncation target: 1e-12 relative to a cheap estimate of
    |value| + 1 (main terms at a shifted point minus the shift logs)."""
    offset = 0.0 if family == "stirling" else 0.5
    shifts = _count_shifts(z, 6.0)
    w = z + shifts
    logw = cmath.log(w)
    if family == "stirling":
        main = (w - 0.5) * logw - w + _HALF_LOG_2PI
    else:
        main = w * logw - w + _HALF_LOG_2PI
    logs = sum(cmath.log(z + offset + j) for j in range(shifts))
    return 1e-12 * (abs(main - logs) + 1.0)


def _resolve_request(
    z: complex, family: str, k: int | None, accuracy: float | None
) -> int:
    if k is not None and accuracy is not None:
        raise DomainError("specify either a fixed term count or a target accuracy")
    if k is not None:
        return k
    eps = accuracy if accuracy is not None else _default_accuracy(z, family)
    context = _family_context(family)
    return choose_k(z, eps, context).k


def eval_lngamma(
    z: complex, k: int | None = None, accuracy: float | None = None
) -> CertifiedValue:
    """Certified lngamma(z) anywhere off the cut (-inf, 0].

    Request either a fixed term count ``k`` or a target ``accuracy``;
    with neither, the target defaults to 1e-12 relative to |value| + 1.
    """
    z = complex(z)
    if _on_cut(z):
        raise DomainError(f"lngamma is not defined on the cut (-inf, 0]: z={z}")
    if z.real < 0.0:
        # The accuracy request targets the truncation bound; halve it for
        # the inner evaluation so the reflection assembly keeps headroom.
        inner_accuracy = accuracy / 2.0 if accuracy is not None else None
        inner = eval_lngamma(-z, k=k, accuracy=inner_accuracy)
        return _reflect(z, inner)
    k_used = _resolve_request(z, "stirling", k, accuracy)
    return _eval_right(z, k_used, "stirling")


def eval_lngamma_half(
    z: complex, k: int | None = None, accuracy: float | None = None
) -> CertifiedValue:
    """Certified lngamma(z + 1/2) for z in the closed right half-plane."""
    z = complex(z)
    if z.real < 0.0:
        raise DomainError(
            f"the half-shifted evaluation requires Re(z) >= 0, got z={z}"
        )
    k_used = _resolve_request(z, "gauss", k, accuracy)
    return _eval_right(z, k_used, "gauss")
