"""Arbitrary-precision oracle: self-verified references for every evaluator."""
from __future__ import annotations

import math
from fractions import Fraction

import mpmath as mp
import pytest

from gammatheta import ConsistencyError, DomainError
from gammatheta.bounds import gamma_ratio_bound
from gammatheta.oracle import (
    MAX_DIGITS,
    ConjectureSample,
    RemainderWitness,
    clear_caches,
    conjecture_grid,
    conjecture_scan,
    oracle_lngamma,
    oracle_remainder,
    oracle_theta,
    oracle_theta_remainder,
    required_table2_digits,
    sharpness_ratio,
    theta_series_value,
)


# -- lngamma -----------------------------------------------------------------


@pytest.mark.parametrize(
    "z", [2.0 + 0j, 0.5 + 0j, 0.5 + 3j, 10j, -2.5 + 1j, 1e-2 + 5j, 40.0 - 7j]
)
def test_lngamma_matches_the_external_reference(z):
    got = oracle_lngamma(z, 40)
    with mp.workdps(60):
        want = mp.loggamma(mp.mpc(z))
        assert abs(got - want) <= abs(want) * mp.mpf(10) ** (-38) + mp.mpf(10) ** (-38)


def test_lngamma_of_one_is_zero_to_full_precision():
    got = oracle_lngamma(1.0 + 0j, 40)
    assert abs(got) < mp.mpf(10) ** (-38)


def test_lngamma_rejects_the_cut():
    with pytest.raises(DomainError):
        oracle_lngamma(-3.0 + 0j, 30)
    with pytest.raises(DomainError):
        oracle_lngamma(0.0 + 0j, 30)


def test_digit_requests_are_validated():
    with pytest.raises(DomainError):
        oracle_lngamma(2.0 + 0j, 0)
    with pytest.raises(DomainError):
        oracle_lngamma(2.0 + 0j, MAX_DIGITS + 1)
    with pytest.raises(DomainError):
        oracle_lngamma(2.0 + 0j, 12.5)


def test_values_are_consistent_across_precision_requests():
    a = oracle_lngamma(0.5 + 7j, 25)
    b = oracle_lngamma(0.5 + 7j, 45)
    assert abs(a - b) <= abs(b) * mp.mpf(10) ** (-23)


# -- remainders --------------------------------------------------------------


def test_remainder_witness_reports_agreeing_methods():
    witness = oracle_remainder(0.5 + 12j, 7, "stirling", 30, details=True)
    assert isinstance(witness, RemainderWitness)
    assert witness.difference <= witness.tolerance
    assert witness.digits_a >= 30
    assert witness.tail_terms > 0
    assert witness.value == witness.method_a


def test_remainder_equals_reference_minus_partial_sum():
    # Independent reassembly at high precision: R_k+1 = lngamma - main - sum.
    z, k = 1.0 + 6j, 5
    got = oracle_remainder(z, k, "stirling", 35)
    with mp.workdps(80):
        zz = mp.mpc(z)
        main = (zz - mp.mpf(1) / 2) * mp.log(zz) - zz + mp.log(2 * mp.pi) / 2
        total = mp.loggamma(zz) - main
        for j in range(1, k + 1):
            b = mp.bernoulli(2 * j)
            total -= b / (2 * j * (2 * j - 1) * zz ** (2 * j - 1))
        assert abs(got - total) <= abs(total) * mp.mpf(10) ** (-30)


def test_remainder_validates_its_arguments():
    with pytest.raises(DomainError):
        oracle_remainder(-1.0 + 2j, 3, "stirling", 20)
    with pytest.raises(DomainError):
        oracle_remainder(2.0 + 0j, 0, "stirling", 20)
    with pytest.raises(DomainError):
        oracle_remainder(2.0 + 0j, 3, "laplace", 20)


def test_half_family_remainder_real_part_is_k_independent_on_the_axis():
    # Re R-hat_k(it) = -log(1 + e^(-2 pi t)) / 2 for every k.
    for t in (0.5, 2.0):
        with mp.workdps(40):
            want = -mp.log(1 + mp.exp(-2 * mp.pi * mp.mpf(t))) / 2
        values = [
            oracle_remainder(complex(0.0, t), k, "gauss", 30).real for k in (1, 3, 7)
        ]
        for value in values:
            assert abs(value - want) <= abs(want) * mp.mpf(10) ** (-25)


def test_remainder_magnitude_respects_the_proven_bound():
    for k, z in ((2, 0.5 + 4j), (6, 9.0 + 0j)):
        truth = abs(oracle_remainder(z, k, "stirling", 20))
        assert truth <= gamma_ratio_bound(k, z).value


# -- theta -------------------------------------------------------------------


def test_theta_matches_the_external_reference():
    for t in (0.3, 1.0, 17.5):
        got = oracle_theta(t, 40)
        with mp.workdps(60):
            z = mp.mpc(mp.mpf(1) / 4, mp.mpf(t) / 2)
            want = mp.im(mp.loggamma(z)) - mp.mpf(t) / 2 * mp.log(mp.pi)
            assert abs(got - want) <= (abs(want) + 1) * mp.mpf(10) ** (-38)


def test_theta_requires_positive_finite_t():
    with pytest.raises(DomainError):
        oracle_theta(0.0, 30)
    with pytest.raises(DomainError):
        oracle_theta(math.inf, 30)


def test_theta_remainder_closes_the_truncation_identity():
    # theta(t) = truncated-with-arctan value + remainder, to full precision.
    t, k = 2.5, 4
    series = theta_series_value(t, k, 35, variant="arctan")
    remainder = oracle_theta_remainder(k, t, 35)
    want = oracle_theta(t, 35)
    with mp.workdps(45):
        assert abs(series + remainder - want) <= mp.mpf(10) ** (-30)


def test_theta_series_value_variants_differ_by_documented_corrections():
    t, k = 3.0, 6
    standard = theta_series_value(t, k, 35, variant="standard")
    arctan = theta_series_value(t, k, 35, variant="arctan")
    empirical = theta_series_value(t, k, 35, variant="empirical")
    with mp.workdps(40):
        assert abs(arctan - standard - mp.atan(mp.exp(-mp.pi * mp.mpf(t))) / 2) < mp.mpf(
            10
        ) ** (-30)
    assert empirical != arctan
    with pytest.raises(DomainError):
        theta_series_value(t, k, 35, variant="secant")


def test_table2_digit_requirement_grows_linearly():
    assert required_table2_digits(10) == math.ceil(20 * math.pi / math.log(10)) + 30
    assert required_table2_digits(100) > required_table2_digits(10)


# -- sharpness and conjecture scans -------------------------------------------


def test_sharpness_ratio_validates_and_stays_under_the_general_bound():
    with pytest.raises(DomainError):
        sharpness_ratio(3, 0.0)
    k, y = 3, 5.0
    ratio = sharpness_ratio(k, y, 20)
    assert 0.0 < ratio <= gamma_ratio_bound(k, complex(0.0, y)).normalized


def test_conjecture_grid_shape_and_axis_exactness():
    points = list(conjecture_grid(6))
    assert len(points) == 6 * 4 * 3
    assert points[0] == (1, 1.0, 0.0)
    ks = {k for k, _, _ in points}
    assert ks == set(range(1, 7))


def test_conjecture_scan_reports_no_violation_on_a_small_prefix():
    samples = list(conjecture_scan(4, digits=12))
    assert len(samples) == 4 * 4 * 3
    for sample in samples:
        assert isinstance(sample, ConjectureSample)
        assert sample.status == ("proven" if sample.k >= 34 else "conjectured")
        assert sample.ratio <= 1.0
        assert not sample.violation


# -- caches ------------------------------------------------------------------


def test_clear_caches_keeps_results_stable():
    before = oracle_lngamma(0.5 + 9j, 30)
    clear_caches()
    after = oracle_lngamma(0.5 + 9j, 30)
    assert before == after
