from fractions import Fraction

import pytest

from app.domain.exceptions import InvalidRunConfigError
from app.domain.services.correspondence import g_resummation_check, lambda_from_F_check, wavefunction_G_check


def test_printed_g_window_resums_to_theta_and_eta():
    report = g_resummation_check()
    assert report.passed, report.failures[:3]
    # 9 monomials, 3 lines, 3 samples
    assert report.checked == 81


def test_single_rational_sample():
    report = g_resummation_check(max_degree=2, samples=((Fraction(7), Fraction(2), Fraction(1, 5)),))
    assert report.passed, report.failures


def test_g_window_is_limited_to_printed_terms():
    with pytest.raises(InvalidRunConfigError):
        g_resummation_check(max_degree=4)
    with pytest.raises(InvalidRunConfigError):
        g_resummation_check(max_a_power=3)


def test_wavefunction_matches_exp_g():
    report = wavefunction_G_check(nu=10.0, alpha=6.0, q=0.02)
    assert report.passed, report.failures


@pytest.mark.parametrize(
    "kwargs",
    [{"q": 0.1}, {"nu": 5.0}, {"order": 3}],
    ids=["large-nome", "small-nu", "short-order"],
)
def test_wavefunction_check_rejects_settings_outside_its_window(kwargs):
    with pytest.raises(InvalidRunConfigError):
        wavefunction_G_check(**kwargs)


def test_eigenvalue_from_prepotential():
    report = lambda_from_F_check(nu=10.0, alpha=6.0, q=0.02)
    assert report.passed, report.failures
    assert report.details["error"] <= report.budget


def test_zero_nome_runs_the_exact_part_only():
    report = lambda_from_F_check(q=0)
    assert report.passed
    assert report.details["error"] == 0.0
    assert report.details["f_side"] == -100.0


def test_eigenvalue_check_rejects_large_nome():
    with pytest.raises(InvalidRunConfigError):
        lambda_from_F_check(q=0.2)
