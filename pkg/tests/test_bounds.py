"""Certified truncation bounds: constants, families, selection rules."""
from __future__ import annotations

import math
from fractions import Fraction

import mpmath as mp
import pytest

from gammatheta import DomainError
from gammatheta.bounds import (
    CONTAINMENT_T,
    BoundKind,
    Target,
    applicable_bounds,
    best_bound,
    c_k,
    c_k_string,
    ck_bound,
    ck_table,
    conjectured_bound,
    containment_grid,
    eta,
    eta_fraction,
    faulty_theta_bound,
    gamma_ratio_bound,
    half_bound,
    literature_bound,
    quadratic_bound,
    sqrt_pik_bound,
    theta_bound,
)
from gammatheta.series import stirling_term, theta_term

# Frozen six-decimal (rounded-up) presentation of the quadratic-bound
# constants at the documented fifteen indices.
CK_PINS = {
    1: "0.072096",
    2: "0.103961",
    3: "0.104294",
    4: "0.105304",
    5: "0.106460",
    6: "0.107384",
    7: "0.108089",
    8: "0.108634",
    9: "0.109067",
    10: "0.109419",
    15: "0.110498",
    20: "0.111050",
    25: "0.111384",
    30: "0.111609",
    50: "0.112060",
}

CK_LIMIT = 1.0 / (math.pi**2 - 1.0)


# -- constants ---------------------------------------------------------------


@pytest.mark.parametrize(("k", "expected"), sorted(CK_PINS.items()))
def test_ck_six_decimal_strings_match_reference(k, expected):
    assert c_k_string(k, 6) == expected


def test_ck_string_rounds_up_not_to_nearest():
    # c_100 = 0.112401204...; rounding *up* at six places gives ...02.
    assert c_k_string(100, 9) == "0.112401204"
    assert c_k_string(100, 6) == "0.112402"


def test_ck_values_increase_and_stay_below_the_limit():
    previous = 0.0
    for k in range(1, 101):
        value = c_k(k)
        assert previous < value < CK_LIMIT
        previous = value


def test_ck_decimal_rounding_never_decreases_the_value():
    for k in (1, 7, 33, 100):
        assert c_k(k, decimals=6) >= c_k(k)
        assert c_k(k, decimals=2) >= c_k(k, decimals=6)


def test_ck_table_rejects_out_of_range_indices():
    with pytest.raises(DomainError):
        c_k(101)
    with pytest.raises(DomainError):
        c_k(0)
    assert len(ck_table().values) == 100


def test_eta_fraction_is_exact():
    assert eta_fraction(1) == Fraction(2)
    assert eta_fraction(2) == Fraction(8, 7)
    assert eta_fraction(5) == Fraction(512, 511)
    for k in (1, 3, 10):
        assert eta(k) >= float(eta_fraction(k))
        assert eta(k) > 1.0


# -- plain family ------------------------------------------------------------


def test_gamma_ratio_is_the_sharpest_general_form():
    # sqrt(pi k) is a closed-form weakening: never below the gamma ratio.
    for k in (1, 2, 5, 20, 80):
        z = complex(2.0, 3.0)
        sharp = gamma_ratio_bound(k, z).normalized
        weak = sqrt_pik_bound(k, z).normalized
        assert 1.0 <= sharp <= weak


def test_quadratic_forms_require_k_at_most_argument_magnitude():
    assert quadratic_bound(5, 4.0 + 0j).applicable is False
    assert quadratic_bound(5, 6.0 + 0j).applicable is True
    assert ck_bound(5, 4.0 + 0j).applicable is False
    assert ck_bound(101, 200.0 + 0j).applicable is False  # beyond the table


def test_ck_bound_sharpens_the_quadratic_bound():
    for k, z in ((2, 9.0 + 2j), (10, 30j), (50, 60.0 + 60j)):
        plain = quadratic_bound(k, z)
        sharp = ck_bound(k, z)
        assert sharp.applicable and plain.applicable
        assert sharp.value < plain.value
        assert sharp.normalized < plain.normalized


def test_plain_bounds_reject_the_left_half_plane():
    for fn in (gamma_ratio_bound, sqrt_pik_bound, quadratic_bound, ck_bound):
        result = fn(2, complex(-1.0, 5.0))
        assert result.applicable is False
        assert math.isinf(result.value)


def test_before_term_target_adds_one_to_the_normalized_form():
    z = complex(1.0, 4.0)
    for k in (1, 3, 9):
        after = gamma_ratio_bound(k, z, Target.R_KP1)
        before = gamma_ratio_bound(k, z, Target.R_K)
        assert before.normalized == pytest.approx(after.normalized + 1.0, rel=1e-9)


def test_bound_values_scale_with_the_current_term():
    k, z = 4, complex(0.5, 7.0)
    result = gamma_ratio_bound(k, z)
    assert result.value == pytest.approx(
        result.normalized * abs(stirling_term(k, z)), rel=1e-12
    )


def test_bound_index_validation():
    with pytest.raises(DomainError):
        gamma_ratio_bound(0, 1 + 1j)
    with pytest.raises(DomainError):
        best_bound(-3, 1 + 1j, "stirling")


# -- half-shifted family -----------------------------------------------------


def test_half_family_transports_plain_bounds_with_the_eta_factor():
    k, z = 4, complex(3.0, 4.0)
    plain = gamma_ratio_bound(k, z)
    half = half_bound(k, z)
    assert half.kind is BoundKind.HALF_GAMMA_RATIO
    assert half.normalized / plain.normalized == pytest.approx(eta(k), rel=1e-9)


def test_half_family_eta_omission_is_guarded():
    with pytest.raises(DomainError):
        half_bound(2, complex(0.5, 0.25), omit_eta=True)
    allowed = half_bound(3, complex(0.5, 0.25), omit_eta=True)
    assert "ETA_OMITTED" in allowed.flags
    taken = half_bound(2, complex(5.0, 0.0), omit_eta=True)
    assert "ETA_OMITTED" in taken.flags


def test_half_family_keeps_the_ck_kind_name():
    result = half_bound(3, 10.0 + 0j, base=BoundKind.CK_QUADRATIC)
    assert result.kind is BoundKind.CK_QUADRATIC
    with pytest.raises(DomainError):
        half_bound(3, 10.0 + 0j, base=BoundKind.HARE)


# -- theta family ------------------------------------------------------------


def test_theta_quadratic_requires_t_at_least_k():
    assert theta_bound(8, 5.0, BoundKind.THETA_QUADRATIC).applicable is False
    assert theta_bound(4, 5.0, BoundKind.THETA_QUADRATIC).applicable is True


def test_theta_r_k_target_adds_the_current_term():
    k, t = 5, 9.0
    after = {b.kind: b for b in applicable_bounds(k, t, "theta", Target.R_KP1)}
    before = {b.kind: b for b in applicable_bounds(k, t, "theta", Target.R_K)}
    term = theta_term(k, t)
    for kind, b in before.items():
        if not b.applicable:
            continue
        assert b.value >= after[kind].value + term
        assert b.normalized == pytest.approx(after[kind].normalized + 1.0, rel=1e-9)


def test_theta_no_arctan_bound_carries_the_exponential_tail():
    k, t = 4, 2.0
    with_arctan = theta_bound(k, t, BoundKind.THETA_SQRT_PIK)
    without = theta_bound(k, t, BoundKind.THETA_NO_ARCTAN)
    gap = without.value - with_arctan.value
    assert gap == pytest.approx(0.5 * math.exp(-math.pi * t), rel=1e-9)


def test_theta_bounds_reject_nonpositive_t():
    assert theta_bound(3, 0.0).applicable is False
    assert theta_bound(3, -2.0).applicable is False


# -- literature bounds -------------------------------------------------------


def test_sector_bound_is_free_inside_the_quarter_sector():
    inside = literature_bound(BoundKind.WHITTAKER_WATSON, 3, 4.0 + 1j, Target.R_K)
    assert inside.normalized == 1.0
    outside = literature_bound(BoundKind.WHITTAKER_WATSON, 3, 1.0 + 4j, Target.R_K)
    assert outside.normalized > 1.0
    assert (
        literature_bound(BoundKind.WHITTAKER_WATSON, 3, -1.0 + 4j, Target.R_K).applicable
        is False
    )


def test_sector_bound_wins_on_the_positive_real_axis():
    result = best_bound(4, 5.0, "stirling", Target.R_K)
    assert result.kind is BoundKind.WHITTAKER_WATSON
    assert result.normalized == 1.0


def test_secant_power_bound_squares_away_from_the_axis():
    # sec(pi/4)^(2k) = 2^k on the imaginary axis.
    result = literature_bound(BoundKind.STIELTJES, 3, 10j, Target.R_K)
    assert result.normalized == pytest.approx(8.0, rel=1e-9)
    assert literature_bound(BoundKind.STIELTJES, 3, 10j, Target.R_KP1).applicable is False


def test_next_term_relative_bound_only_serves_the_after_k_target():
    ok = literature_bound(BoundKind.BEHNKE_SOMMER, 4, 6.0 + 1j, Target.R_KP1)
    assert ok.applicable
    assert "RELATIVE_TO_NEXT_TERM" in ok.flags
    assert ok.value == pytest.approx(
        ok.normalized * abs(stirling_term(5, 6.0 + 1j)), rel=1e-9
    )
    assert (
        literature_bound(BoundKind.BEHNKE_SOMMER, 4, 6.0 + 1j, Target.R_K).applicable
        is False
    )


def test_imaginary_part_bound_requires_a_nonreal_argument():
    assert literature_bound(BoundKind.HARE, 3, 5.0 + 0j, Target.R_K).applicable is False
    result = literature_bound(BoundKind.HARE, 3, 5.0 + 2j, Target.R_K)
    assert result.applicable and result.value > 0.0


# -- non-rigorous bounds -----------------------------------------------------


def test_refuted_historical_bound_matches_its_closed_form():
    k, t = 3, 9.5
    want = math.factorial(2 * k) / (
        (2 * math.pi) ** (2 * k + 2) * t ** (2 * k + 1)
    ) + math.exp(-math.pi * t)
    assert faulty_theta_bound(k, t) == pytest.approx(want, rel=1e-12)
    with pytest.raises(DomainError):
        faulty_theta_bound(3, 0.0)


def test_sharper_quadratic_form_is_flagged_by_proof_status():
    assert "CONJECTURED" in conjectured_bound(10, 50.0 + 0j).flags
    assert "PROVEN" in conjectured_bound(34, 50.0 + 0j).flags
    assert conjectured_bound(10, 5.0 + 0j).applicable is False  # needs |z| >= k


def test_certifying_selection_never_uses_unproven_or_refuted_forms():
    excluded = {BoundKind.CONJECTURED_QUADRATIC, BoundKind.FAULTY_HISTORICAL}
    for target in (Target.R_KP1, Target.R_K):
        for candidate in applicable_bounds(6, 10.0 + 3j, "stirling", target):
            assert candidate.kind not in excluded
        assert best_bound(6, 10.0 + 3j, "stirling", target).kind not in excluded


# -- selection ---------------------------------------------------------------


def test_best_bound_is_the_minimum_of_the_applicable_candidates():
    candidates = applicable_bounds(8, 10j, "stirling", Target.R_KP1)
    values = [c.value for c in candidates if c.applicable]
    assert best_bound(8, 10j, "stirling").value == min(values)


def test_best_bound_raises_when_nothing_applies():
    with pytest.raises(DomainError):
        best_bound(2, complex(-3.0, 1.0), "stirling", Target.R_KP1)
    with pytest.raises(DomainError):
        applicable_bounds(2, 1.0 + 0j, "fresnel")


def test_containment_grid_shape():
    grid = containment_grid()
    assert len(grid) == 19
    assert all(z.real >= 0.0 for z in grid)
    assert len(set(grid)) == 19
    assert CONTAINMENT_T == (0.1, 1.0, 10.0, 40.0)


@pytest.mark.slow
def test_every_applicable_bound_contains_the_true_remainder_spot_checks():
    # Fast spot version of the exhaustive containment sweep that lives in
    # the acceptance gate.
    from gammatheta.oracle import oracle_remainder, oracle_theta_remainder

    for k, z in ((2, complex(0.5, 3.0)), (5, complex(4.0, 1.0))):
        truth = abs(oracle_remainder(z, k, "stirling", 20))
        for candidate in applicable_bounds(k, z, "stirling", Target.R_KP1):
            if candidate.applicable:
                assert truth <= candidate.value
    truth = abs(oracle_theta_remainder(3, 2.5, 20))
    for candidate in applicable_bounds(3, 2.5, "theta", Target.R_KP1):
        if candidate.applicable:
            assert truth <= candidate.value
