"""Slow, arbitrary-precision, self-verifying reference computations.

Everything the fast certified path is tested against lives here:

* ``oracle_lngamma`` — shift far enough right that the series' smallest term
  is below the target, sum adaptively, and certify the truncation with the
  closed-half-plane tail bound before returning.
* ``oracle_remainder`` — the series remainder after k terms by two
  independent methods: (a) subtracting main terms and partial sum from
  ``oracle_lngamma``, and (b) the exact periodic-kernel integral
  ``-(1/2k) \\int_0^U B_2k({u + offset}) (z+u)^{-2k} du`` plus the series
  continuation of the remainder at ``z + U`` (an integer shift leaves the
  periodic kernel invariant).  The two must agree or a consistency error is
  raised.
* ``oracle_theta`` / ``oracle_theta_remainder`` — the theta function from
  the half-shifted log-Gamma on the critical line, cross-checked for small
  ``t`` against the defining arg-Gamma form.
* ``table2_row`` — the four normalized-error columns of the reference table.
* ``sharpness_ratio`` / ``conjecture_scan`` — the numeric spot checks and
  the grid scan behind the scan command.

All working precisions carry explicit guard digits; results are rounded to
the requested digit count on return.  Caches are keyed by exact binary
values and precision, so repeated calls are deterministic.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
from mpmath import mpc, mpf

from . import bernoulli as _bernoulli_mod
from .bernoulli import bernoulli_number, shared_table
from .bounds import eta_fraction
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .fputil import log_abs_fraction
from .series import k_min, term_coefficient

__all__ = [
    "MAX_DIGITS",
    "oracle_lngamma",
    "oracle_remainder",
    "RemainderWitness",
    "oracle_theta",
    "oracle_theta_remainder",
    "theta_series_value",
    "NormalizedErrorRow",
    "required_table2_digits",
    "table2_row",
    "sharpness_ratio",
    "SHARPNESS_SPOTS",
    "ConjectureSample",
    "conjecture_grid",
    "conjecture_scan",
    "clear_caches",
]

#: Hard cap on requested digits for any oracle entry point.
MAX_DIGITS = 1000

_LN10 = math.log(10.0)
_SERIES_INDEX_CAP = _bernoulli_mod.MAX_INDEX // 2

#: The two published sharpness spot checks: (k, y) with the remainder after
#: k terms compared against the k-th term on the imaginary axis.
SHARPNESS_SPOTS = ((90, 100.0 / math.pi), (383, 400.0 / math.pi))

_cache_lock = threading.Lock()
_coeff_cache: dict[tuple[str, int, int], mpf] = {}
_poly_cache: dict[tuple[int, int], tuple[mpf, ...]] = {}
_nodes_cache: dict[tuple[int, int], tuple[tuple[mpf, ...], tuple[mpf, ...]]] = {}
_lngamma_cache: dict[tuple[object, object, int], mpc] = {}


def clear_caches() -> None:
    """Drop all precision-keyed caches (primarily for tests)."""
    with _cache_lock:
        _coeff_cache.clear()
        _poly_cache.clear()
        _nodes_cache.clear()
        _lngamma_cache.clear()


def _check_digits(digits: int) -> int:
    if not isinstance(digits, int):
        raise DomainError(f"digits must be an integer, got {digits!r}")
    if digits < 1 or digits > MAX_DIGITS:
        raise DomainError(f"digits must lie in [1, {MAX_DIGITS}], got {digits}")
    return digits


def _coeff(kind: str, j: int) -> mpf:
    """Series coefficient as an mpf at the current working precision."""
    key = (kind, j, mp.mp.prec)
    with _cache_lock:
        hit = _coeff_cache.get(key)
    if hit is None:
        fr = term_coefficient(kind, j)
        hit = mpf(fr.numerator) / fr.denominator
        with _cache_lock:
            _coeff_cache[key] = hit
    return hit


def _poly_mpf(n: int) -> tuple[mpf, ...]:
    """Coefficients of B_n(x), highest power first, as mpf values."""
    key = (n, mp.mp.prec)
    with _cache_lock:
        hit = _poly_cache.get(key)
    if hit is None:
        coeffs = shared_table().poly_coefficients(n)
        hit = tuple(mpf(c.numerator) / c.denominator for c in coeffs)
        with _cache_lock:
            _poly_cache[key] = hit
    return hit


# ---------------------------------------------------------------------------
# Gauss-Legendre nodes (Newton iteration on the Legendre recurrence)
# ---------------------------------------------------------------------------


def _legendre_pair(n: int, x: mpf) -> tuple[mpf, mpf]:
    """(P_n(x), P_n'(x)) by the three-term recurrence."""
    p0, p1 = mpf(1), x
    for m in range(2, n + 1):
        p0, p1 = p1, ((2 * m - 1) * x * p1 - (m - 1) * p0) / m
    dp = n * (x * p1 - p0) / (x * x - 1)
    return p1, dp


def _gl_nodes_01(n: int = 20) -> tuple[tuple[mpf, ...], tuple[mpf, ...]]:
    """Gauss-Legendre nodes and weights on [0, 1] at the current precision."""
    key = (n, mp.mp.prec)
    with _cache_lock:
        hit = _nodes_cache.get(key)
    if hit is not None:
        return hit
    pairs: list[tuple[mpf, mpf]] = []
    with mp.extraprec(40):
        target = mpf(2) ** (-mp.mp.prec + 12)
        for i in range(1, n // 2 + 1):
            x = mpf(math.cos(math.pi * (i - 0.25) / (n + 0.5)))
            for _ in range(200):
                p, dp = _legendre_pair(n, x)
                dx = p / dp
                x -= dx
                if abs(dx) < target:
                    break
            else:
                raise ConsistencyError("Legendre root iteration failed to converge")
            p, dp = _legendre_pair(n, x)
            x -= p / dp
            _, dp = _legendre_pair(n, x)
            w = 2 / ((1 - x * x) * dp * dp)
            pairs.append((x, w))
    # n is even in all uses, so roots come in symmetric nonzero pairs; fold
    # them onto [0, 1] in ascending order.
    nodes: list[mpf] = []
    weights: list[mpf] = []
    for x, w in sorted(pairs, reverse=True):
        nodes.append(+((1 - x) / 2))
        weights.append(+(w / 2))
    for x, w in sorted(pairs):
        nodes.append(+((1 + x) / 2))
        weights.append(+(w / 2))
    result = (tuple(nodes), tuple(weights))
    with _cache_lock:
        _nodes_cache[key] = result
    return result


# ---------------------------------------------------------------------------
# lngamma
# ---------------------------------------------------------------------------


def _shift_count(zz: mpc, radius_target: float) -> int:
    """Smallest n >= 0 with Re(z)+n >= 1/2 and |z+n| >= radius_target."""
    half = mpf("0.5")
    n = 0
    if zz.real < half:
        n = int(mp.ceil(half - zz.real))
    radius = mpf(radius_target)
    gap2 = radius * radius - zz.imag * zz.imag
    if gap2 > 0:
        need = int(mp.ceil(mp.sqrt(gap2) - zz.real))
        n = max(n, need)
    while zz.real + n < half or abs(zz + n) < radius:
        n += 1
    return n


def _lngamma_attempt(zz: mpc, n: int, digits: int):
    """One shifted-series evaluation; returns (value, certified).

    The adaptive stop and the final certificate both use the tail bound
    sqrt(pi j) |T_j(w)|, which dominates the closed-half-plane Gamma-ratio
    bound sqrt(pi) Gamma(j+1/2)/Gamma(j) |T_j(w)| for every j >= 1, so it is
    valid with no restriction tying j to |w|.  Returns (None, False) when
    the Bernoulli cap is hit before the bound certifies (the caller retries
    with a larger shift radius, which makes the terms decay faster).
    """
    w = zz + n
    inv_w = 1 / w
    inv_w2 = inv_w * inv_w
    p = inv_w
    acc = mpc(0)
    tau = mpf(10) ** (-(digits + 6))
    j = 1
    while True:
        term = _coeff("stirling", j) * p
        acc += term
        tail_bound = mp.sqrt(mp.pi * j) * abs(term)
        if tail_bound < tau:
            break
        j += 1
        if j > _SERIES_INDEX_CAP:
            return None, False
        p *= inv_w2
    main = (w - mpf("0.5")) * mp.log(w) - w + mp.log(2 * mp.pi) / 2
    logs = mpc(0)
    for i in range(n):
        logs += mp.log(zz + i)
    result = main + acc - logs
    certified = tail_bound < mpf(10) ** (-(digits + 5)) * (1 + abs(result))
    return result, certified


def oracle_lngamma(z, digits: int = 30) -> mpc:
    """lngamma(z) to ``digits`` rounded digits, principal branch, off the
    cut (-inf, 0].

    The truncation certificate is re-checked against the assembled result;
    on failure the shift radius grows and the evaluation repeats, so a
    returned value is always self-certified.
    """
    digits = _check_digits(digits)
    wp = digits + 15
    with mp.workdps(wp):
        zz = mpc(z)
        if zz.imag == 0 and zz.real <= 0:
            raise DomainError(
                f"lngamma oracle is undefined on the cut (-inf, 0]: z={zz}"
            )
        key = (zz.real._mpf_, zz.imag._mpf_, digits)
        with _cache_lock:
            hit = _lngamma_cache.get(key)
        if hit is not None:
            return hit
        radius_target = (digits + 8) * _LN10 / (2.0 * math.pi) + 2.0
        result = None
        for _ in range(6):
            n = _shift_count(zz, radius_target)
            result, certified = _lngamma_attempt(zz, n, digits)
            if certified:
                break
            radius_target *= 1.15
        else:
            raise ResourceLimitError(
                f"lngamma oracle cannot certify {digits} digits within the "
                f"Bernoulli-table cap"
            )
    with mp.workdps(digits):
        out = +result
    with _cache_lock:
        _lngamma_cache[key] = out
    return out


# ---------------------------------------------------------------------------
# remainders, two independent ways
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RemainderWitness:
    """Both methods' values and the agreement evidence for one remainder."""

    value: mpc
    method_a: mpc
    method_b: mpc
    digits_a: int
    shift: int
    tail_terms: int
    tail_value: mpc
    crude_tail_bound: mpf
    difference: mpf
    tolerance: mpf


def _require_remainder_args(z, k: int, family: str) -> complex:
    if family not in ("stirling", "gauss"):
        raise DomainError(
            f"remainder family must be stirling or gauss, got {family!r}"
        )
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"term count must be a positive integer, got {k!r}")
    zc = complex(z)
    if not zc.real >= 0.0 or zc == 0:
        raise DomainError(
            f"remainder oracle needs the closed right half-plane minus 0, got {zc}"
        )
    return zc


def _log10_term(family: str, k: int, zz) -> float:
    """log10 |T_k(z)| from the exact coefficient (big-integer safe)."""
    return float(
        (log_abs_fraction(term_coefficient(family, k)) - (2 * k - 1) * mp.log(abs(zz)))
        / _LN10
    )


def _partial_sum_mp(family: str, k: int, zz: mpc) -> mpc:
    inv_w = 1 / zz
    inv_w2 = inv_w * inv_w
    p = inv_w
    acc = mpc(0)
    for j in range(1, k + 1):
        acc += _coeff(family, j) * p
        p *= inv_w2
    return acc


def _main_terms_mp(family: str, zz: mpc) -> mpc:
    logw = mp.log(zz)
    if family == "stirling":
        return (zz - mpf("0.5")) * logw - zz + mp.log(2 * mp.pi) / 2
    return zz * logw - zz + mp.log(2 * mp.pi) / 2


def _tail_series(w: mpc, k: int, family: str, tau: mpf):
    """Sum T_j(w) for j > k until the proven tail bound drops below tau.

    Returns (sum, last_index) or None when the bound cannot reach tau within
    the Bernoulli cap.  The factor 2 for the half-shifted family dominates
    every eta_j, keeping the certificate valid there too.
    """
    safety = 2 if family == "gauss" else 1
    inv_w = 1 / w
    inv_w2 = inv_w * inv_w
    p = inv_w ** (2 * k + 1)
    acc = mpc(0)
    j = k + 1
    while True:
        term = _coeff(family, j) * p
        acc += term
        bound = safety * mp.sqrt(mp.pi * j) * abs(term)
        if bound < tau:
            return acc, j
        j += 1
        if j > _SERIES_INDEX_CAP:
            return None
        p *= inv_w2


def _gl_apply(kernel, a: mpf, b: mpf, nodes, weights) -> mpc:
    h = b - a
    acc = mpc(0)
    for x, w in zip(nodes, weights):
        acc += w * kernel(a + h * x)
    return acc * h


def _adaptive_panel(kernel, a: mpf, b: mpf, tol: mpf, nodes, weights) -> mpc:
    """Bisect the panel until two successive refinement levels agree."""
    prev = _gl_apply(kernel, a, b, nodes, weights)
    pieces = 1
    for _ in range(12):
        pieces *= 2
        h = (b - a) / pieces
        cur = mpc(0)
        for i in range(pieces):
            cur += _gl_apply(kernel, a + i * h, a + (i + 1) * h, nodes, weights)
        if abs(cur - prev) <= tol:
            return cur
        prev = cur
    raise ConsistencyError(
        f"quadrature panel [{mp.nstr(a, 8)}, {mp.nstr(b, 8)}] failed to stabilize"
    )


def _remainder_by_integral(z: complex, k: int, family: str, digits: int, log_t: float):
    """Method (b): periodic-kernel integral over [0, U] plus the series
    continuation of the remainder at z + U.

    U adapts upward until the continuation's tail certificate reaches the
    target; panels are half-integer so every kernel breakpoint (integers for
    the plain family, half-integers for the shifted one) is a panel edge.
    """
    wp = digits + 25
    offset = mpf(0) if family == "stirling" else mpf("0.5")
    with mp.workdps(wp):
        zz = mpc(z)
        tau_tail = mpf(10) ** (log_t - digits - 9)
        needed = max(1.0, (digits + 10 - log_t) * _LN10 / (2.0 * math.pi) + 1.0)
        gap2 = needed * needed - float(zz.imag) ** 2
        shift = 1
        if gap2 > 0:
            shift = max(1, int(math.ceil(math.sqrt(gap2) - float(zz.real))))
        tail = None
        for _ in range(12):
            if shift > 1000:
                raise ResourceLimitError(
                    f"remainder oracle needs more than 1000 unit panels at z={z}, k={k}"
                )
            tail = _tail_series(zz + shift, k, family, tau_tail)
            if tail is not None:
                break
            shift = int(shift * 1.4) + 1
        if tail is None:
            raise ResourceLimitError(
                f"remainder oracle could not certify the series tail at z={z}, k={k}"
            )
        tail_sum, tail_terms = tail

        nodes, weights = _gl_nodes_01(20)
        poly = _poly_mpf(2 * k)
        two_k = mpf(2 * k)
        power = 2 * k

        def kernel(u: mpf) -> mpc:
            v = u + offset
            x = v - mp.floor(v)
            acc = poly[0]
            for c in poly[1:]:
                acc = acc * x + c
            return acc / (two_k * (zz + u) ** power)

        panel_tol = mpf(10) ** (log_t - digits - 8) / (2 * shift)
        integral = mpc(0)
        for m in range(2 * shift):
            integral += _adaptive_panel(
                kernel, mpf(m) / 2, mpf(m + 1) / 2, panel_tol, nodes, weights
            )

        value = -integral + tail_sum
        crude_fr = abs(bernoulli_number(2 * k)) / (2 * k * (2 * k - 1))
        crude = (mpf(crude_fr.numerator) / crude_fr.denominator) / mpf(shift) ** (
            2 * k - 1
        )
        return value, tail_sum, tail_terms, shift, crude


def oracle_remainder(
    z, k: int, family: str = "stirling", digits: int = 30, details: bool = False
):
    """Remainder after k series terms at z (closed right half-plane), to
    ``digits`` digits, verified by two independent methods.

    Returns the rounded method-(a) value (an ``mpc``), or a full
    :class:`RemainderWitness` when ``details=True``.  Raises a consistency
    error if the methods disagree beyond ``10^(5-digits)`` relative to the
    larger of the two values and the k-th term's magnitude.
    """
    digits = _check_digits(digits)
    zc = _require_remainder_args(z, k, family)

    with mp.workdps(30):
        zz0 = mpc(zc)
        log_t = _log10_term(family, k, zz0)
        main_mag = float(abs(_main_terms_mp(family, zz0))) + 2.0
        first_mag = _log10_term(family, 1, zz0)
        cancel_scale = max(math.log10(main_mag), first_mag, log_t)
    loss = max(0, int(math.ceil(cancel_scale - log_t)))
    digits_a = digits + 12 + loss
    digits_a = ((digits_a + 19) // 20) * 20  # quantize for cache reuse
    if digits_a > MAX_DIGITS:
        raise ResourceLimitError(
            f"remainder at z={zc}, k={k} needs {digits_a} oracle digits "
            f"(cancellation), beyond the cap {MAX_DIGITS}"
        )

    with mp.workdps(digits_a + 15):
        zz = mpc(zc)
        lngamma_arg = zz if family == "stirling" else zz + mpf("0.5")
        lg = oracle_lngamma(lngamma_arg, digits_a)
        a_val = lg - _main_terms_mp(family, zz) - _partial_sum_mp(family, k, zz)

    b_val, tail_sum, tail_terms, shift, crude = _remainder_by_integral(
        zc, k, family, digits, log_t
    )

    with mp.workdps(digits + 10):
        scale = max(abs(a_val), abs(b_val), mpf(10) ** log_t)
        difference = abs(a_val - b_val)
        tolerance = mpf(10) ** (-(digits - 5)) * scale
        if difference > tolerance:
            raise ConsistencyError(
                f"remainder methods disagree at z={zc}, k={k}, {family}: "
                f"|a-b|={mp.nstr(difference, 5)} > tol={mp.nstr(tolerance, 5)}"
            )
    with mp.workdps(digits):
        out = +a_val
    if not details:
        return out
    with mp.workdps(digits):
        return RemainderWitness(
            value=out,
            method_a=+a_val,
            method_b=+b_val,
            digits_a=digits_a,
            shift=shift,
            tail_terms=tail_terms,
            tail_value=+tail_sum,
            crude_tail_bound=+crude,
            difference=+difference,
            tolerance=+tolerance,
        )


# ---------------------------------------------------------------------------
# theta
# ---------------------------------------------------------------------------


def oracle_theta(t, digits: int = 30) -> mpf:
    """theta(t) for t > 0 to ``digits`` digits.

    Computed from Im lngamma(1/2 + it); for t <= 3 the value is additionally
    cross-checked against the defining form Im lngamma(1/4 + it/2) -
    (t/2) log pi (for larger t the two differ only through the same oracle,
    and the branch bookkeeping is exercised by the certified path's tests).
    """
    digits = _check_digits(digits)
    tf = float(t)
    if not tf > 0.0 or math.isinf(tf):
        raise DomainError(f"theta oracle requires finite t > 0, got {t!r}")
    wp = digits + 15
    with mp.workdps(wp):
        tt = mpf(tf)
        lg = oracle_lngamma(mpc(mpf("0.5"), tt), min(digits + 8, MAX_DIGITS))
        value = (
            lg.imag / 2
            - tt / 2 * mp.log(2 * mp.pi)
            - mp.pi / 8
            + mp.atan(mp.exp(-mp.pi * tt)) / 2
        )
        if tt <= 3:
            lg2 = oracle_lngamma(
                mpc(mpf("0.25"), tt / 2), min(digits + 8, MAX_DIGITS)
            )
            alt = lg2.imag - tt / 2 * mp.log(mp.pi)
            tolerance = mpf(10) ** (-(digits - 5)) * (1 + abs(value))
            if abs(value - alt) > tolerance:
                raise ConsistencyError(
                    f"theta oracle forms disagree at t={tf}: "
                    f"|delta|={mp.nstr(abs(value - alt), 5)}"
                )
    with mp.workdps(digits):
        return +value


def oracle_theta_remainder(k: int, t, digits: int = 30) -> mpf:
    """Remainder of the theta series after k terms: Im(R_hat_{k+1}(it))/2."""
    tf = float(t)
    if not tf > 0.0:
        raise DomainError(f"theta remainder oracle requires t > 0, got {t!r}")
    digits = _check_digits(digits)
    r = oracle_remainder(
        complex(0.0, tf), k, "gauss", min(digits + 5, MAX_DIGITS)
    )
    with mp.workdps(digits):
        return +(r.imag / 2)


def theta_series_value(
    t,
    k: int,
    digits: int = 30,
    variant: str = "standard",
    correction_constant=Fraction(1, 12),
) -> mpf:
    """Reference value of a truncated theta approximation at full precision:
    main terms plus k series terms, optionally with the arctan correction
    and the empirical least-term correction."""
    digits = _check_digits(digits)
    variant = getattr(variant, "value", variant)
    if variant not in ("standard", "arctan", "empirical"):
        raise DomainError(f"unknown theta variant {variant!r}")
    tf = float(t)
    if not tf > 0.0 or math.isinf(tf):
        raise DomainError(f"theta series value requires finite t > 0, got {t!r}")
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"term count must be a positive integer, got {k!r}")
    with mp.workdps(digits + 15):
        tt = mpf(tf)
        value = tt / 2 * (mp.log(tt) - mp.log(2 * mp.pi) - 1) - mp.pi / 8
        inv_t = 1 / tt
        inv_t2 = inv_t * inv_t
        p = inv_t
        for j in range(1, k + 1):
            value += _coeff("theta", j) * p
            p *= inv_t2
        if variant in ("arctan", "empirical"):
            value += mp.atan(mp.exp(-mp.pi * tt)) / 2
        if variant == "empirical":
            report = k_min(tf)
            t_min = _coeff("theta", report.k_min) / tt ** (2 * report.k_min - 1)
            cc = Fraction(correction_constant)
            correction = mpf(cc.numerator) / cc.denominator
            value += (mp.pi * tt - report.k_min + correction) * t_min
    with mp.workdps(digits):
        return +value


# ---------------------------------------------------------------------------
# the normalized-error table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormalizedErrorRow:
    """One row of the normalized-error table at height t.

    All normalizations are by the least term T_min = T_{k_min}(t):
    ``standard_error``  = (theta - standard approximation) / T_min,
    ``proven_bound``    = eta_{k_min} sqrt(pi k_min), the proven remainder
    bound in the same units,
    ``arctan_error``    = (theta - arctan-corrected approximation) / T_min,
    ``empirical_error`` = arctan_error - (pi t - k_min + 1/12), the residual
    of the empirical correction.  Values carry 25 significant digits.
    """

    t: float
    k_min: int
    standard_error: mpf
    proven_bound: mpf
    arctan_error: mpf
    empirical_error: mpf


def required_table2_digits(t) -> int:
    """Digits needed to resolve the e^(-2 pi t)-scale columns with ~20+
    digits to spare."""
    return int(math.ceil(2.0 * math.pi * float(t) / _LN10)) + 30


def table2_row(t, digits: int | None = None) -> NormalizedErrorRow:
    """Compute one normalized-error row; ``digits=None`` uses the required
    minimum for the height t."""
    tf = float(t)
    if not tf > 0.0 or math.isinf(tf):
        raise DomainError(f"table row requires finite t > 0, got {t!r}")
    needed = required_table2_digits(tf)
    if digits is None:
        digits = needed
    digits = _check_digits(digits)
    if digits < needed:
        raise DomainError(
            f"table row at t={tf} needs at least {needed} digits, got {digits}"
        )
    report = k_min(tf)
    km = report.k_min
    theta_true = oracle_theta(tf, digits)
    standard = theta_series_value(tf, km, digits, "standard")
    with mp.workdps(digits + 15):
        tt = mpf(tf)
        t_min = _coeff("theta", km) / tt ** (2 * km - 1)
        arctan_corrected = standard + mp.atan(mp.exp(-mp.pi * tt)) / 2
        col_a = (theta_true - standard) / t_min
        col_c = (theta_true - arctan_corrected) / t_min
        col_d = col_c - (mp.pi * tt - km + mpf(1) / 12)
        eta = eta_fraction(km)
        col_b = mpf(eta.numerator) / eta.denominator * mp.sqrt(mp.pi * km)
    with mp.workdps(25):
        return NormalizedErrorRow(
            t=tf,
            k_min=km,
            standard_error=+col_a,
            proven_bound=+col_b,
            arctan_error=+col_c,
            empirical_error=+col_d,
        )


# ---------------------------------------------------------------------------
# sharpness spots and the conjecture scan
# ---------------------------------------------------------------------------


def sharpness_ratio(k: int, y, digits: int = 20) -> mpf:
    """|R_{k+1}(iy)| / |T_k(iy)| on the imaginary axis."""
    digits = _check_digits(digits)
    yf = float(y)
    if not yf > 0.0:
        raise DomainError(f"sharpness ratio requires y > 0, got {y!r}")
    value = oracle_remainder(complex(0.0, yf), k, "stirling", digits)
    with mp.workdps(digits + 10):
        term_abs = abs(_coeff("stirling", k)) / mpf(yf) ** (2 * k - 1)
        ratio = abs(value) / term_abs
    with mp.workdps(digits):
        return +ratio


@dataclass(frozen=True)
class ConjectureSample:
    """One grid point of the conjectured-quadratic-bound scan."""

    k: int
    abs_z: float
    arg_z: float
    true_over_term: float
    conjectured: float
    ratio: float
    violation: bool
    status: str  # "proven" for k >= 34, "conjectured" below


def conjecture_grid(k_max: int = 40):
    """The deterministic scan grid: |z| in {k, k+1/2, 2k, 10k} and
    arg z in {0, pi/4, pi/2}, stressing the k ~ |z| corner."""
    for k in range(1, k_max + 1):
        for modulus in (float(k), k + 0.5, 2.0 * k, 10.0 * k):
            for arg in (0.0, math.pi / 4.0, math.pi / 2.0):
                yield k, modulus, arg


def conjecture_scan(k_max: int = 40, digits: int = 20):
    """Yield one :class:`ConjectureSample` per grid point, in grid order.

    ``ratio`` is (true |R_{k+1}/T_k|) / (k^2 / (pi^2 |z|^2 - k^2)); the
    conjecture holds at a point when ratio <= 1.  Violations are reported,
    not raised: for k < 34 the bound is only conjectured.
    """
    digits = _check_digits(digits)
    for k, modulus, arg in conjecture_grid(k_max):
        if arg == 0.0:
            z = complex(modulus, 0.0)
        elif arg == math.pi / 2.0:
            z = complex(0.0, modulus)
        else:
            c = modulus / math.sqrt(2.0)
            z = complex(c, c)
        value = oracle_remainder(z, k, "stirling", digits)
        with mp.workdps(digits + 10):
            term_abs = abs(_coeff("stirling", k)) / abs(mpc(z)) ** (2 * k - 1)
            true_ratio = float(abs(value) / term_abs)
        conjectured = k * k / (math.pi * math.pi * modulus * modulus - k * k)
        ratio = true_ratio / conjectured
        yield ConjectureSample(
            k=k,
            abs_z=modulus,
            arg_z=arg,
            true_over_term=true_ratio,
            conjectured=conjectured,
            ratio=ratio,
            violation=ratio > 1.0,
            status="proven" if k >= 34 else "conjectured",
        )
