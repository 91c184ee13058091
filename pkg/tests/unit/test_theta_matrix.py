from fractions import Fraction

import pytest

from app.domain.exceptions import InvalidRunConfigError
from app.domain.model.theta_matrix import GaugeParams, Theta4Matrix
from app.domain.services.theta_matrix import (
    digest_check,
    divisor_checks,
    e2_identity_check,
    log_eta_series,
    log_theta4_matrix,
    product_form_check,
)


def test_leading_block_of_the_theta4_matrix():
    m = log_theta4_matrix(0, 4)
    assert m[0, 0] == 0
    assert [m[1, j] for j in range(4)] == [1, 1, 1, 0]
    assert [m[2, j] for j in range(4)] == [Fraction(1, 2), 1, Fraction(3, 2), 1]
    assert [m[3, j] for j in range(4)] == [Fraction(1, 3), 0, 1, Fraction(4, 3)]


def test_derivative_matrix_scales_by_the_index_gap():
    m = log_theta4_matrix(1, 4)
    assert m[2, 0] == 1
    assert m[0, 2] == -1
    assert m[3, 0] == 1
    assert all(m[i, i] == 0 for i in range(4))


def test_row_support_lists_n_minus_divisors():
    m = log_theta4_matrix(0, 13)
    assert m.row_support(12) == [0, 6, 8, 9, 10, 11]


def test_log_eta_coefficients_are_sigma_minus_one():
    assert log_eta_series(4) == [1, Fraction(3, 2), Fraction(4, 3), Fraction(7, 4)]


def test_matrix_validates_its_shape():
    with pytest.raises(InvalidRunConfigError):
        Theta4Matrix(k=0, dim=2, entries=((0, 1),))
    with pytest.raises(InvalidRunConfigError):
        Theta4Matrix(k=-1, dim=1, entries=((0,),))


def test_digest_is_aligned_text():
    text = log_theta4_matrix(0, 3).digest()
    rows = text.splitlines()
    assert len(rows) == 3
    assert len({len(r) for r in rows}) == 1


def test_printed_digest_matches():
    report = digest_check()
    assert report.passed, report.failures[:3]
    assert report.details["dim"] == 22


def test_digest_detects_a_wrong_entry():
    table = [list(row) for row in log_theta4_matrix(0, 5).entries]
    table[4][2] = Fraction(7)
    report = digest_check(table)
    assert not report.passed
    assert "Theta4[4][2]" in report.failures[0]


def test_divisor_structure():
    report = divisor_checks(n_max=60, k_max=3)
    assert report.passed, report.failures[:3]
    assert report.checked > 60


def test_e2_identity():
    report = e2_identity_check(n_max=50, q_samples=(0.01, 0.02))
    assert report.passed, report.failures


def test_matrix_sums_reproduce_theta4():
    report = product_form_check()
    assert report.passed, report.details


def test_divisor_range_must_be_meaningful():
    with pytest.raises(ValueError):
        divisor_checks(n_max=1, k_max=1)


def test_gauge_parameters_follow_the_lame_data():
    gauge = GaugeParams.from_lame(nu=10, n=3)
    assert gauge.nu == pytest.approx(10)
    assert gauge.alpha == pytest.approx(6)
    assert gauge.map_defect(0.3, 0.02) < 1e-14
    with pytest.raises(InvalidRunConfigError):
        GaugeParams(a=1, m=1, eps1=1, eps2=0.5)
