import pytest

from app.application.use_cases.run_verification import (
    SUITES,
    RunVerification,
    RunVerificationRequest,
    _guarded,
)
from app.domain.exceptions import InvalidRunConfigError, ResidualError


def test_golden_and_parity_suites_pass():
    result = RunVerification().execute(RunVerificationRequest(suites=("golden", "parity"), order=4, threads=2))

    assert result.passed, [r.failures for r in result.failed]
    names = [r.name for r in result.reports]
    assert "parity-mathieu-large" in names
    assert "golden-lame-large" in names


def test_reports_keep_the_requested_suite_order():
    result = RunVerification().execute(RunVerificationRequest(suites=("divisors", "sign-replay"), n_max=30, k_max=2))
    assert [r.name for r in result.reports][:2] == ["divisors", "e2-identity"]


def test_unknown_suite_is_a_configuration_error():
    with pytest.raises(InvalidRunConfigError):
        RunVerification().execute(RunVerificationRequest(suites=("golden", "speed")))


def test_empty_suite_list_is_rejected():
    with pytest.raises(InvalidRunConfigError):
        RunVerification().execute(RunVerificationRequest(suites=()))


def test_non_positive_nu_is_rejected():
    with pytest.raises(InvalidRunConfigError):
        RunVerification().execute(RunVerificationRequest(suites=("golden",), nu=0.0))


def test_domain_errors_fail_only_their_suite():
    def broken(request):
        raise ResidualError("v_3 leaves 2*h")

    reports = _guarded("broken", broken, RunVerificationRequest(suites=("golden",)))
    assert len(reports) == 1
    assert not reports[0].passed
    assert reports[0].failures == ("ResidualError: v_3 leaves 2*h",)


def test_configuration_errors_propagate_from_a_suite():
    def misconfigured(request):
        raise InvalidRunConfigError("|q| must be <= 0.05")

    with pytest.raises(InvalidRunConfigError):
        _guarded("misconfigured", misconfigured, RunVerificationRequest(suites=("golden",)))


def test_every_acceptance_suite_is_registered():
    assert set(SUITES) == {
        "golden",
        "closed-forms",
        "parity",
        "sign-replay",
        "jacobi-map",
        "oracle",
        "limit",
        "divisors",
        "appendix",
        "correspondence",
    }
