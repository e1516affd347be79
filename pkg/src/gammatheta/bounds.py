"""Proven truncation-error bounds for the three series families.

Every bound here is a theorem about the remainder of a truncated expansion:
``value`` is an absolute bound on the targeted remainder, ``normalized`` the
same bound divided by the magnitude of the reference term (the last summed
term for an after-k-terms target, the first omitted term otherwise; the
Behnke–Sommer bound is natively relative to the first omitted term).

Upward-rounding policy: bounds are mathematical suprema, so every floating
chain that produces a bound is topped with ``(1 + 2**-40)`` guard factors —
enough to swamp double rounding, far too small to matter against the >1%
slack the bounds themselves carry.  A bound whose true magnitude falls below
the smallest subnormal is clamped to it, never to zero.

The catalog:

=====================  ================================================
kind                   bounds
=====================  ================================================
GAMMA_RATIO            |R| of the plain family by sqrt(pi)*Gamma(k+1/2)
                       / Gamma(k) * |T_k|, right half-plane
SQRT_PIK               its weaker closed form sqrt(pi k) * |T_k|
QUADRATIC              (k/|z|)^2 / (pi^2 - 1) * |T_k| when k <= |z|
CK_QUADRATIC           c_k (k/|z|)^2 * |T_k|, k <= 100, via the stored
                       constant table
HALF_GAMMA_RATIO,      the same three transported to the half-shifted
HALF_SQRT_PIK,         family at the cost of the factor
HALF_QUADRATIC         eta_k = 1/(1 - 2**(1-2k))  (CK transports too,
                       keeping its own kind tag)
THETA_GAMMA_RATIO      absolute bound sqrt(pi) Gamma(k-1/2) |B_2k| /
                       (8 k! t^(2k-1)) on the theta remainder
THETA_SQRT_PIK         eta_k sqrt(pi k) relative to the theta term
THETA_QUADRATIC        eta_k (k/t)^2 / (pi^2 - 1) when t >= k
THETA_NO_ARCTAN        theta bound for the variant that drops the
                       arctan correction: adds e^(-pi t)/2 absolutely
WHITTAKER_WATSON       classical |R_k| <= K(theta) |T_k|, Re z > 0
STIELTJES              classical |R_k| <= sec(theta/2)^(2k) |T_k|
BEHNKE_SOMMER          classical |R_{k+1}/T_{k+1}| < 1+(2k+1)/2*sqrt(pi/k)
HARE                   |R_k| via 1/|Im z|^(2k-1), needs Im z != 0
FAULTY_HISTORICAL      a known-wrong theta bound kept for falsification
CONJECTURED_QUADRATIC  sharper quadratic bound, unproven below k = 34
=====================  ================================================
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from mpmath import mp

from .bernoulli import bernoulli_number
from .errors import DomainError
from .fputil import ceil_float, log_abs_fraction, up
from .series import (
    TINY,
    _log_theta_term,
    gauss_term,
    stirling_term,
    theta_term,
)

__all__ = [
    "BoundKind",
    "Target",
    "BoundResult",
    "CkTable",
    "ck_table",
    "eta",
    "eta_fraction",
    "c_k",
    "c_k_string",
    "gamma_ratio_bound",
    "sqrt_pik_bound",
    "quadratic_bound",
    "ck_bound",
    "half_bound",
    "theta_bound",
    "literature_bound",
    "faulty_theta_bound",
    "conjectured_bound",
    "best_bound",
    "applicable_bounds",
    "CONTAINMENT_T",
    "containment_grid",
]


#: Containment z-grid: every rigorous bound must dominate the true remainder
#: at each of these arguments (for every k in the certification k-range).
#: A right-half-plane lattice re x im plus positive-real anchors; the
#: imaginary-axis column (re = 0) is where the bounds are tightest.
_CONTAINMENT_RE = (0.0, 0.5, 1.0, 5.0)
_CONTAINMENT_IM = (0.1, 1.0, 10.0, 40.0)
_CONTAINMENT_REAL = (1.0, 5.0, 25.0)

#: t-grid for the theta-series containment checks (same role as the z-grid).
CONTAINMENT_T = (0.1, 1.0, 10.0, 40.0)


def containment_grid() -> tuple[complex, ...]:
    """The documented closed-right-half-plane certification grid (19 points)."""
    points = [
        complex(re, im) for re in _CONTAINMENT_RE for im in _CONTAINMENT_IM
    ]
    points.extend(complex(x, 0.0) for x in _CONTAINMENT_REAL)
    return tuple(points)


class BoundKind(str, Enum):
    GAMMA_RATIO = "gamma-ratio"
    SQRT_PIK = "sqrt-pi-k"
    QUADRATIC = "quadratic"
    CK_QUADRATIC = "ck-quadratic"
    HALF_GAMMA_RATIO = "half-gamma-ratio"
    HALF_SQRT_PIK = "half-sqrt-pi-k"
    HALF_QUADRATIC = "half-quadratic"
    THETA_GAMMA_RATIO = "theta-gamma-ratio"
    THETA_SQRT_PIK = "theta-sqrt-pi-k"
    THETA_QUADRATIC = "theta-quadratic"
    THETA_NO_ARCTAN = "theta-no-arctan"
    WHITTAKER_WATSON = "whittaker-watson"
    STIELTJES = "stieltjes"
    BEHNKE_SOMMER = "behnke-sommer"
    HARE = "hare"
    FAULTY_HISTORICAL = "faulty-historical"
    CONJECTURED_QUADRATIC = "conjectured-quadratic"


class Target(str, Enum):
    """Which remainder a bound certifies, relative to ``k`` summed terms."""

    #: Error after summing k terms (the k-th term is the last included).
    R_KP1 = "after-k-terms"
    #: Error after summing k-1 terms (the k-th term is the first omitted).
    R_K = "before-k-th-term"


@dataclass(frozen=True)
class BoundResult:
    kind: BoundKind
    target: Target
    value: float
    normalized: float
    applicable: bool = True
    reason: str = ""
    flags: tuple[str, ...] = field(default=())


def _not_applicable(kind: BoundKind, target: Target, reason: str) -> BoundResult:
    return BoundResult(
        kind=kind,
        target=target,
        value=math.inf,
        normalized=math.inf,
        applicable=False,
        reason=reason,
    )


#: Guard-chain count for assembled bound values; covers the worst observed
#: lgamma / big-int-log / exp chains (~7e-12 relative) with slack.
_CHAINS = 12

#: pi^2 - 1 rounded down two places: a safe denominator for upper bounds.
_PI2M1_DOWN = math.nextafter(math.nextafter(math.pi * math.pi - 1.0, 0.0), 0.0)


def _clamp(x: float) -> float:
    """Keep a bound positive: a zero bound would falsely claim exactness."""
    return x if x > TINY else TINY


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"bound index must be a positive integer, got {k!r}")


def eta_fraction(k: int) -> Fraction:
    """Exact ``1/(1 - 2**(1-2k))`` as a rational."""
    _check_k(k)
    p = 1 << (2 * k - 1)
    return Fraction(p, p - 1)


def eta(k: int) -> float:
    """``1/(1 - 2**(1-2k))`` rounded upward in the last place (always > 1)."""
    return ceil_float(eta_fraction(k))


# ---------------------------------------------------------------------------
# The c_k constant table.
# ---------------------------------------------------------------------------

class CkTable:
    """Constants ``c_k`` for the sharpened quadratic bound, k = 1..100.

    Each entry is ``sum(|T_(k+j)(k) / T_k(k)| for j = 1..2k)
    + sqrt(3 k pi) |T_(3k)(k) / T_k(k)|`` with the term ratios taken at the
    real point ``z = k``.  Values are computed at 60 working digits from the
    exact rational coefficient ratios and stored with a relative upward
    nudge of 1e-45, so every stored value is an upper bound on the true
    constant that is correct to well over 40 digits.
    """

    MAX_K = 100

    def __init__(self) -> None:
        self._values: dict[int, object] = {}
        self._fractions: dict[int, Fraction] = {}
        self._lock = threading.Lock()

    def _compute(self, k: int):
        with mp.workdps(60):
            b2k = bernoulli_number(2 * k)
            base = abs(mp.mpf(b2k.numerator)) / mp.mpf(b2k.denominator)
            base /= 2 * k * (2 * k - 1)
            kk = mp.mpf(k)
            total = mp.mpf(0)
            ratio_3k = None
            for j in range(1, 2 * k + 1):
                m = k + j
                b2m = bernoulli_number(2 * m)
                num = abs(mp.mpf(b2m.numerator)) / mp.mpf(b2m.denominator)
                num /= 2 * m * (2 * m - 1)
                ratio = (num / base) / kk ** (2 * j)
                total += ratio
                if m == 3 * k:
                    ratio_3k = ratio
            total += mp.sqrt(3 * k * mp.pi) * ratio_3k
            stored = total * (1 + mp.mpf(10) ** -45)
            return stored

    def value(self, k: int):
        """Stored 40+-digit upper bound as an ``mpf``."""
        _check_k(k)
        if k > self.MAX_K:
            raise DomainError(
                f"c_k constants are verified only for k <= {self.MAX_K}, got {k}"
            )
        with self._lock:
            if k not in self._values:
                self._values[k] = self._compute(k)
            return self._values[k]

    def fraction(self, k: int) -> Fraction:
        """Stored value as an exact rational (of its 50-digit decimal print)."""
        with self._lock:
            cached = self._fractions.get(k)
        if cached is not None:
            return cached
        v = self.value(k)
        with mp.workdps(60):
            s = mp.nstr(v, 50, strip_zeros=False)
        fr = Fraction(s)
        with self._lock:
            self._fractions[k] = fr
        return fr

    @property
    def values(self) -> list[float]:
        """Double-precision upper bounds c_1..c_100 (computed on demand)."""
        return [ceil_float(self.fraction(k)) for k in range(1, self.MAX_K + 1)]


_CK_TABLE = CkTable()


def ck_table() -> CkTable:
    return _CK_TABLE


def c_k(k: int, decimals: int | None = None) -> float:
    """Upper bound on the k-th quadratic-bound constant (k <= 100).

    With ``decimals`` the stored value is first rounded *up* at that many
    decimal places (the presentation used by the constant table).
    """
    fr = _CK_TABLE.fraction(k)
    if decimals is None:
        return ceil_float(fr)
    scale = 10**decimals
    ceiled = Fraction(-((-fr.numerator * scale) // fr.denominator), scale)
    return ceil_float(ceiled)


def c_k_string(k: int, decimals: int = 6) -> str:
    """``c_k`` rounded up at ``decimals`` places, as a decimal string."""
    fr = _CK_TABLE.fraction(k)
    scale = 10**decimals
    units = -((-fr.numerator * scale) // fr.denominator)
    whole, frac = divmod(units, scale)
    return f"{whole}.{frac:0{decimals}d}"


# ---------------------------------------------------------------------------
# Plain-family bounds (right half-plane).
# ---------------------------------------------------------------------------

def _right_half_plane(z: complex) -> bool:
    return z != 0 and z.real >= 0.0


def _gamma_ratio(k: int) -> float:
    """``sqrt(pi) Gamma(k+1/2) / Gamma(k)``, one upward guard per the policy."""
    return up(math.sqrt(math.pi) * math.exp(math.lgamma(k + 0.5) - math.lgamma(k)))


def _abs_term(kind: str, k: int, z: complex) -> float:
    term = stirling_term(k, z) if kind == "stirling" else gauss_term(k, z)
    return abs(term)


def _plain_bound(
    kind: BoundKind,
    k: int,
    z: complex,
    target: Target,
    base_normalized: float,
) -> BoundResult:
    """Assemble a right-half-plane bound from its after-k-terms normalized
    form; the before-k-th-term form adds exactly 1 (triangle inequality)."""
    normalized = base_normalized + (1.0 if target is Target.R_K else 0.0)
    normalized = up(normalized, _CHAINS)
    value = _clamp(up(normalized * _abs_term("stirling", k, z), _CHAINS))
    return BoundResult(kind=kind, target=target, value=value, normalized=normalized)


def gamma_ratio_bound(
    k: int, z: complex, target: Target = Target.R_KP1
) -> BoundResult:
    """Sharpest general right-half-plane bound for the plain family."""
    _check_k(k)
    z = complex(z)
    if not _right_half_plane(z):
        return _not_applicable(
            BoundKind.GAMMA_RATIO, target, "requires the closed right half-plane, z != 0"
        )
    return _plain_bound(BoundKind.GAMMA_RATIO, k, z, target, _gamma_ratio(k))


def sqrt_pik_bound(k: int, z: complex, target: Target = Target.R_KP1) -> BoundResult:
    """Closed-form weakening of the gamma-ratio bound: sqrt(pi k)."""
    _check_k(k)
    z = complex(z)
    if not _right_half_plane(z):
        return _not_applicable(
            BoundKind.SQRT_PIK, target, "requires the closed right half-plane, z != 0"
        )
    return _plain_bound(BoundKind.SQRT_PIK, k, z, target, up(math.sqrt(math.pi * k)))


def quadratic_bound(k: int, z: complex, target: Target = Target.R_KP1) -> BoundResult:
    """(k/|z|)^2 / (pi^2 - 1) bound, valid for k <= |z|."""
    _check_k(k)
    z = complex(z)
    if not _right_half_plane(z):
        return _not_applicable(
            BoundKind.QUADRATIC, target, "requires the closed right half-plane, z != 0"
        )
    az = abs(z)
    if k > az:
        return _not_applicable(BoundKind.QUADRATIC, target, "requires k <= |z|")
    ratio = k / az
    return _plain_bound(
        BoundKind.QUADRATIC, k, z, target, up(ratio * ratio / _PI2M1_DOWN, 2)
    )


def ck_bound(k: int, z: complex, target: Target = Target.R_KP1) -> BoundResult:
    """c_k (k/|z|)^2 bound, valid for k <= |z| and k <= 100."""
    _check_k(k)
    z = complex(z)
    if not _right_half_plane(z):
        return _not_applicable(
            BoundKind.CK_QUADRATIC, target, "requires the closed right half-plane, z != 0"
        )
    if k > CkTable.MAX_K:
        return _not_applicable(
            BoundKind.CK_QUADRATIC, target, f"c_k verified only for k <= {CkTable.MAX_K}"
        )
    az = abs(z)
    if k > az:
        return _not_applicable(BoundKind.CK_QUADRATIC, target, "requires k <= |z|")
    ratio = k / az
    return _plain_bound(
        BoundKind.CK_QUADRATIC, k, z, target, up(c_k(k) * ratio * ratio, 2)
    )


# ---------------------------------------------------------------------------
# Half-shifted family: transported plain bounds, times eta_k.
# ---------------------------------------------------------------------------

_HALF_KIND = {
    BoundKind.GAMMA_RATIO: BoundKind.HALF_GAMMA_RATIO,
    BoundKind.SQRT_PIK: BoundKind.HALF_SQRT_PIK,
    BoundKind.QUADRATIC: BoundKind.HALF_QUADRATIC,
    BoundKind.CK_QUADRATIC: BoundKind.CK_QUADRATIC,
}

_BASE_FN = {
    BoundKind.GAMMA_RATIO: gamma_ratio_bound,
    BoundKind.SQRT_PIK: sqrt_pik_bound,
    BoundKind.QUADRATIC: quadratic_bound,
    BoundKind.CK_QUADRATIC: ck_bound,
}


def _eta_factor(k: int, scale: float, omit_eta: bool) -> tuple[float, tuple[str, ...]]:
    """The transport factor, or 1 under the documented opt-out.

    The opt-out leans on an external proof valid only for k >= 3 or when the
    argument magnitude is >= 1; outside that region it is refused.
    """
    if not omit_eta:
        return eta(k), ()
    if k < 3 and scale < 1.0:
        raise DomainError(
            "eta omission is only supported for k >= 3 or argument magnitude >= 1"
        )
    return 1.0, ("ETA_OMITTED",)


def half_bound(
    k: int,
    z: complex,
    target: Target = Target.R_KP1,
    base: BoundKind = BoundKind.GAMMA_RATIO,
    omit_eta: bool = False,
) -> BoundResult:
    """Bound for the half-shifted family, from a plain-family base bound.

    Normalized form: ``eta_k * (base after-k-terms normalized)`` relative to
    the half-family term; the before-k-th-term target adds 1 on top.
    """
    _check_k(k)
    if base not in _HALF_KIND:
        raise DomainError(f"unsupported base bound kind {base!r}")
    z = complex(z)
    kind = _HALF_KIND[base]
    base_result = _BASE_FN[base](k, z, Target.R_KP1)
    if not base_result.applicable:
        return _not_applicable(kind, target, base_result.reason)
    factor, flags = _eta_factor(k, abs(z), omit_eta)
    normalized = factor * base_result.normalized
    if target is Target.R_K:
        normalized += 1.0
    normalized = up(normalized, _CHAINS)
    value = _clamp(up(normalized * _abs_term("gauss", k, z), _CHAINS))
    return BoundResult(
        kind=kind, target=target, value=value, normalized=normalized, flags=flags
    )


# ---------------------------------------------------------------------------
# Theta-family bounds (positive real argument).
# ---------------------------------------------------------------------------

def _log_abs_bernoulli(k: int) -> float:
    return log_abs_fraction(Fraction(bernoulli_number(2 * k)))


def theta_bound(
    k: int,
    t: float,
    kind: BoundKind = BoundKind.THETA_GAMMA_RATIO,
    omit_eta: bool = False,
) -> BoundResult:
    """Bound on the theta-family remainder after ``k`` summed terms.

    THETA_NO_ARCTAN is special: it bounds the total error of the variant
    that also omits the arctan correction, hence the additive e^(-pi t)/2.
    """
    _check_k(k)
    t = float(t)
    target = Target.R_KP1
    if not (t > 0.0) or math.isinf(t):
        return _not_applicable(kind, target, "requires finite t > 0")

    if kind is BoundKind.THETA_GAMMA_RATIO:
        logv = (
            0.5 * math.log(math.pi)
            + math.lgamma(k - 0.5)
            + _log_abs_bernoulli(k)
            - math.log(8.0)
            - math.lgamma(k + 1)
            - (2 * k - 1) * math.log(t)
        )
        log_term = _log_theta_term(k, t)
        try:
            value = _clamp(up(math.exp(logv), _CHAINS))
        except OverflowError:
            return _not_applicable(kind, target, "bound value exceeds double range")
        normalized = up(math.exp(logv - log_term), _CHAINS)
        return BoundResult(kind=kind, target=target, value=value, normalized=normalized)

    if kind is BoundKind.THETA_SQRT_PIK:
        factor, flags = _eta_factor(k, t, omit_eta)
        normalized = up(factor * math.sqrt(math.pi * k), _CHAINS)
        value = _clamp(up(normalized * theta_term(k, t), _CHAINS))
        return BoundResult(
            kind=kind, target=target, value=value, normalized=normalized, flags=flags
        )

    if kind is BoundKind.THETA_QUADRATIC:
        if t < k:
            return _not_applicable(kind, target, "requires t >= k")
        factor, flags = _eta_factor(k, t, omit_eta)
        ratio = k / t
        normalized = up(factor * ratio * ratio / _PI2M1_DOWN, _CHAINS)
        value = _clamp(up(normalized * theta_term(k, t), _CHAINS))
        return BoundResult(
            kind=kind, target=target, value=value, normalized=normalized, flags=flags
        )

    if kind is BoundKind.THETA_NO_ARCTAN:
        factor, flags = _eta_factor(k, t, omit_eta)
        tt = theta_term(k, t)
        core = up(factor * math.sqrt(math.pi * k) * tt, _CHAINS)
        extra = 0.5 * math.exp(-math.pi * t) if -math.pi * t > -745.0 else TINY
        value = _clamp(up(core + up(extra), _CHAINS))
        normalized = up(value / tt, 2) if tt > 0 else math.inf
        return BoundResult(
            kind=kind, target=target, value=value, normalized=normalized, flags=flags
        )

    raise DomainError(f"unsupported theta bound kind {kind!r}")


# ---------------------------------------------------------------------------
# Classical bounds from the literature (plain family only).
# ---------------------------------------------------------------------------

def literature_bound(
    kind: BoundKind, k: int, z: complex, target: Target
) -> BoundResult:
    """One of the four classical plain-family bounds, at its native target.

    WHITTAKER_WATSON, STIELTJES and HARE bound the remainder with the k-th
    term *omitted* (before-k-th-term); BEHNKE_SOMMER bounds the remainder
    after k terms, relative to the first omitted term.
    """
    _check_k(k)
    z = complex(z)
    if z == 0:
        return _not_applicable(kind, target, "argument must be nonzero")
    theta_z = math.atan2(z.imag, z.real)

    if kind is BoundKind.WHITTAKER_WATSON:
        if target is not Target.R_K:
            return _not_applicable(kind, target, "bounds only the before-k-th-term remainder")
        if z.real <= 0.0:
            return _not_applicable(kind, target, "requires Re(z) > 0")
        if abs(theta_z) <= 0.25 * math.pi:
            factor = 1.0
        else:
            factor = up(1.0 / abs(math.sin(2.0 * theta_z)), 2)
        value = _clamp(up(factor * _abs_term("stirling", k, z), 2))
        return BoundResult(kind=kind, target=target, value=value, normalized=factor)

    if kind is BoundKind.STIELTJES:
        if target is not Target.R_K:
            return _not_applicable(kind, target, "bounds only the before-k-th-term remainder")
        if not abs(theta_z) < math.pi:
            return _not_applicable(kind, target, "requires |arg z| < pi")
        log_sec = -math.log(math.cos(0.5 * theta_z))
        if 2 * k * log_sec > 700.0:
            return _not_applicable(kind, target, "bound value exceeds double range")
        factor = up(math.exp(2 * k * log_sec), 4)
        value = _clamp(up(factor * _abs_term("stirling", k, z), 4))
        return BoundResult(kind=kind, target=target, value=value, normalized=factor)

    if kind is BoundKind.BEHNKE_SOMMER:
        if target is not Target.R_KP1:
            return _not_applicable(kind, target, "bounds only the after-k-terms remainder")
        if not _right_half_plane(z):
            return _not_applicable(kind, target, "requires the closed right half-plane, z != 0")
        normalized = up(1.0 + 0.5 * (2 * k + 1) * math.sqrt(math.pi / k), _CHAINS)
        value = _clamp(up(normalized * _abs_term("stirling", k + 1, z), _CHAINS))
        return BoundResult(
            kind=kind,
            target=target,
            value=value,
            normalized=normalized,
            flags=("RELATIVE_TO_NEXT_TERM",),
        )

    if kind is BoundKind.HARE:
        if target is not Target.R_K:
            return _not_applicable(kind, target, "bounds only the before-k-th-term remainder")
        if z.imag == 0.0:
            return _not_applicable(kind, target, "requires Im(z) != 0")
        logv = (
            math.log(4.0)
            + 0.5 * math.log(math.pi)
            + math.lgamma(k + 0.5)
            - math.lgamma(k)
            + _log_abs_bernoulli(k)
            - math.log(2 * k * (2 * k - 1))
            - (2 * k - 1) * math.log(abs(z.imag))
        )
        try:
            value = _clamp(up(math.exp(logv), _CHAINS))
        except OverflowError:
            return _not_applicable(kind, target, "bound value exceeds double range")
        at = _abs_term("stirling", k, z)
        normalized = up(value / at, 2) if at > 0 else math.inf
        return BoundResult(kind=kind, target=target, value=value, normalized=normalized)

    raise DomainError(f"unsupported literature bound kind {kind!r}")


# ---------------------------------------------------------------------------
# Non-rigorous bounds: kept only for falsification tests and scans.
# ---------------------------------------------------------------------------

def faulty_theta_bound(k: int, t: float) -> float:
    """A historically published — and provably wrong — theta-series error
    bound: ``(2k)! / ((2 pi)^(2k+2) t^(2k+1)) + e^(-pi t)``.

    Returned as a plain number: it must never participate in certification.
    """
    _check_k(k)
    t = float(t)
    if not (t > 0.0):
        raise DomainError(f"faulty bound requires t > 0, got {t!r}")
    logv = (
        math.lgamma(2 * k + 1)
        - (2 * k + 2) * math.log(2.0 * math.pi)
        - (2 * k + 1) * math.log(t)
    )
    try:
        power_part = math.exp(logv)
    except OverflowError:
        return math.inf
    exp_part = math.exp(-math.pi * t) if -math.pi * t > -745.0 else 0.0
    return power_part + exp_part


def conjectured_bound(
    k: int, z: complex, target: Target = Target.R_KP1
) -> BoundResult:
    """Sharper quadratic bound ``k^2 / (pi^2 |z|^2 - k^2)``; proven only for
    k >= 34, flagged CONJECTURED below that.  Excluded from certification."""
    _check_k(k)
    z = complex(z)
    if not _right_half_plane(z):
        return _not_applicable(
            BoundKind.CONJECTURED_QUADRATIC,
            target,
            "requires the closed right half-plane, z != 0",
        )
    az = abs(z)
    if az < k:
        return _not_applicable(
            BoundKind.CONJECTURED_QUADRATIC, target, "requires |z| >= k"
        )
    den = (math.pi * az) ** 2 - float(k) ** 2
    if target is Target.R_KP1:
        normalized = up(k * k / den, _CHAINS)
    else:
        normalized = up((math.pi * az) ** 2 / den, _CHAINS)
    value = _clamp(up(normalized * _abs_term("stirling", k, z), _CHAINS))
    flag = "PROVEN" if k >= 34 else "CONJECTURED"
    return BoundResult(
        kind=BoundKind.CONJECTURED_QUADRATIC,
        target=target,
        value=value,
        normalized=normalized,
        flags=(flag,),
    )


# ---------------------------------------------------------------------------
# Selection.
# ---------------------------------------------------------------------------

_CONTEXTS = ("stirling", "gauss", "theta")

#: Candidate order fixes tie-breaks deterministically; the classical bounds
#: come after the in-house family so an exact tie (e.g. both normalized 1 on
#: the positive real axis) resolves to the earlier, fewer-guard result.
_LITERATURE_R_K = (
    BoundKind.WHITTAKER_WATSON,
    BoundKind.STIELTJES,
    BoundKind.HARE,
)


def applicable_bounds(
    k: int,
    argument: complex,
    context: str,
    target: Target = Target.R_KP1,
) -> list[BoundResult]:
    """Every rigorous bound for the context/target, applicable or not.

    Classical literature bounds are stated for the plain family only and
    are offered only at their native target.
    """
    if context not in _CONTEXTS:
        raise DomainError(f"unknown bound context {context!r}")
    results: list[BoundResult] = []
    if context == "stirling":
        z = complex(argument)
        results.append(gamma_ratio_bound(k, z, target))
        results.append(sqrt_pik_bound(k, z, target))
        results.append(quadratic_bound(k, z, target))
        results.append(ck_bound(k, z, target))
        if target is Target.R_K:
            for kind in _LITERATURE_R_K:
                results.append(literature_bound(kind, k, z, target))
        else:
            results.append(
                literature_bound(BoundKind.BEHNKE_SOMMER, k, z, target)
            )
    elif context == "gauss":
        z = complex(argument)
        for base in (
            BoundKind.GAMMA_RATIO,
            BoundKind.SQRT_PIK,
            BoundKind.QUADRATIC,
            BoundKind.CK_QUADRATIC,
        ):
            results.append(half_bound(k, z, target, base))
    else:
        t = float(argument.real) if isinstance(argument, complex) else float(argument)
        for kind in (
            BoundKind.THETA_GAMMA_RATIO,
            BoundKind.THETA_SQRT_PIK,
            BoundKind.THETA_QUADRATIC,
        ):
            res = theta_bound(k, t, kind)
            if res.applicable and target is Target.R_K:
                tt = theta_term(k, t)
                res = BoundResult(
                    kind=res.kind,
                    target=Target.R_K,
                    value=_clamp(up(res.value + tt, 2)),
                    normalized=up(res.normalized + 1.0, 2),
                    flags=res.flags,
                )
            results.append(res)
    return results


def best_bound(
    k: int,
    argument: complex,
    context: str,
    target: Target = Target.R_KP1,
) -> BoundResult:
    """Minimum applicable rigorous bound (faulty/conjectured are excluded
    by construction — they are not in the candidate set)."""
    best: BoundResult | None = None
    for candidate in applicable_bounds(k, argument, context, target):
        if not candidate.applicable:
            continue
        if best is None or candidate.value < best.value:
            best = candidate
    if best is None:
        raise DomainError(
            f"no applicable bound for k={k}, argument={argument!r}, "
            f"context={context!r}, target={target.value}"
        )
    return best
