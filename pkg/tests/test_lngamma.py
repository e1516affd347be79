"""Certified log-gamma evaluation: containment, shifts, reflection, planning."""
from __future__ import annotations

import cmath
import math

import mpmath as mp
import pytest

from gammatheta import AccuracyError, DomainError
from gammatheta.lngamma import (
    CertifiedValue,
    TruncationPlan,
    choose_k,
    eval_lngamma,
    eval_lngamma_half,
)

RIGHT_POINTS = [
    complex(1.0, 0.0),
    complex(0.5, 0.0),
    complex(25.0, 0.0),
    complex(0.0, 10.0),
    complex(0.0, -3.0),
    complex(0.5, 40.0),
    complex(5.0, 1.0),
    complex(1e-3, 2.0),
    complex(300.0, 700.0),
]

LEFT_POINTS = [
    complex(-2.5, 1.0),
    complex(-7.3, -0.4),
    complex(-0.5, 12.0),
    complex(-40.0, 0.25),
]


def reference(z: complex) -> complex:
    with mp.workdps(40):
        return complex(mp.loggamma(mp.mpc(z)))


@pytest.mark.parametrize("z", RIGHT_POINTS + LEFT_POINTS)
def test_value_contains_the_reference_within_radius(z):
    result = eval_lngamma(z)
    assert isinstance(result, CertifiedValue)
    assert abs(result.value - reference(z)) <= result.radius
    assert result.radius < 1e-9  # default request is a ~1e-12-relative target


@pytest.mark.parametrize("z", [complex(0.0, 0.0), complex(-1.0, 0.0), complex(-2.5, 0.0)])
def test_the_cut_is_rejected(z):
    with pytest.raises(DomainError):
        eval_lngamma(z)


def test_reflection_is_flagged_and_contained():
    result = eval_lngamma(complex(-2.5, 1.0))
    assert "REFLECTED" in result.flags
    assert abs(result.value - reference(complex(-2.5, 1.0))) <= result.radius


def test_classic_values_are_reproduced():
    one = eval_lngamma(complex(1.0, 0.0), k=8)
    assert abs(one.value) <= one.radius
    half = eval_lngamma(complex(0.5, 0.0))
    assert abs(half.value - 0.5 * math.log(math.pi)) <= half.radius


def test_fixed_term_count_is_respected_and_shifts_follow_the_rule():
    result = eval_lngamma(complex(1.0, 0.0), k=8)
    assert result.plan.k == 8
    assert result.plan.shifts == 7  # 1 + 7 reaches |z'| = 8 >= k
    assert result.plan.truncation_bound > 0.0


def test_recurrence_consistency_between_adjacent_arguments():
    for z in (complex(3.0, 4.0), complex(0.5, 9.0), complex(12.0, -2.0)):
        a = eval_lngamma(z)
        b = eval_lngamma(z + 1)
        residual = abs(b.value - cmath.log(z) - a.value)
        assert residual <= a.radius + b.radius + 1e-13


def test_half_shift_agrees_with_the_plain_family():
    for z in (complex(2.0, 0.0), complex(0.5, 6.0), complex(10.0, 10.0)):
        half = eval_lngamma_half(z)
        plain = eval_lngamma(z + 0.5)
        assert abs(half.value - plain.value) <= half.radius + plain.radius


def test_half_shift_containment_against_the_reference():
    for z in (complex(0.0, 10.0), complex(0.5, 0.0), complex(7.0, 3.0)):
        result = eval_lngamma_half(z)
        want = reference(complex(z.real + 0.5, z.imag))
        assert abs(result.value - want) <= result.radius


def test_half_shift_requires_the_closed_right_half_plane():
    with pytest.raises(DomainError):
        eval_lngamma_half(complex(-0.1, 5.0))


def test_term_count_and_accuracy_are_mutually_exclusive():
    with pytest.raises(DomainError):
        eval_lngamma(complex(5.0, 0.0), k=4, accuracy=1e-10)


def test_requested_accuracy_bounds_the_radius():
    for eps in (1e-4, 1e-8, 1e-11):
        result = eval_lngamma(complex(2.0, 3.0), accuracy=eps)
        assert result.plan.truncation_bound <= eps
        assert result.radius <= eps + 1e-12  # rounding budget rides on top


def test_unattainable_accuracy_raises_with_the_best_radius():
    with pytest.raises(AccuracyError) as info:
        eval_lngamma(complex(2.0, 3.0), accuracy=1e-30)
    assert info.value.best_radius is not None
    assert info.value.best_radius > 0.0


def test_plan_selection_is_minimal_and_monotone():
    plan = choose_k(complex(10.0, 0.0), 1.0)
    assert isinstance(plan, TruncationPlan)
    assert plan.k == 1
    loose = choose_k(complex(5.0, 5.0), 1e-3).k
    tight = choose_k(complex(5.0, 5.0), 1e-9).k
    assert loose <= tight
    with pytest.raises(DomainError):
        choose_k(complex(5.0, 5.0), 0.0)
    with pytest.raises(DomainError):
        choose_k(complex(5.0, 5.0), 1e-6, context="fresnel")


def test_plan_rejects_what_the_scan_cannot_reach():
    with pytest.raises(AccuracyError):
        choose_k(complex(0.5, 0.5), 1e-40)


def test_truncation_bound_decreases_with_k_for_a_fixed_argument():
    # Non-increase holds through the least-term region ~pi |z|.
    z = complex(0.0, 10.0)
    bounds = [eval_lngamma(z, k=k).plan.truncation_bound for k in range(1, 32)]
    assert all(b <= a for a, b in zip(bounds, bounds[1:]))


def test_radius_decreases_with_k_away_from_the_rounding_floor():
    # Once the truncation bound sinks below the ~1e-13 rounding budget the
    # radius flattens (and creeps up with the per-term charges), so the
    # non-increase claim applies to the truncation-dominated prefix.
    z = complex(0.0, 10.0)
    radii = [eval_lngamma(z, k=k).radius for k in range(1, 7)]
    assert all(b <= a for a, b in zip(radii, radii[1:]))


def test_large_arguments_stay_finite_and_contained():
    z = complex(5000.0, 0.0)
    result = eval_lngamma(z)
    assert math.isfinite(result.value.real)
    assert abs(result.value - reference(z)) <= result.radius


def test_imaginary_part_tracks_the_reference_branch():
    # No 2 pi jumps: the reflected/shifted assembly must land on the same
    # branch the reference implementation uses, not just the same modulus.
    for z in LEFT_POINTS + [complex(0.5, 40.0)]:
        result = eval_lngamma(z)
        assert abs(result.value.imag - reference(z).imag) <= result.radius
