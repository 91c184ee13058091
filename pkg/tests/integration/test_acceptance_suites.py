"""Full verification suites at their default settings; slow, run with ``-m slow``."""

import pytest

from app.main import EXIT_OK

pytestmark = pytest.mark.slow


@pytest.mark.parametrize(
    "suite",
    ["golden", "closed-forms", "parity", "sign-replay", "jacobi-map", "divisors", "appendix", "correspondence"],
)
def test_suite_passes(run_json, suite):
    code, payload = run_json("verify", suite)
    assert code == EXIT_OK, payload["fields"]["failed"]


def test_oracle_suite(run_json):
    code, payload = run_json("verify", "oracle")
    assert code == EXIT_OK, payload["fields"]["failed"]


def test_limit_suite(run_json):
    code, payload = run_json("verify", "limit")
    assert code == EXIT_OK, payload["fields"]["failed"]


def test_sweep_small_energy(run_json):
    code, payload = run_json("sweep", "--problem", "mathieu-minpi2")
    assert code == EXIT_OK
    assert payload["fields"]["predicted_slope"] > 0


def test_limits_over_three_decades(run_json):
    code, payload = run_json("limits", "--order", "4")
    assert code == EXIT_OK
