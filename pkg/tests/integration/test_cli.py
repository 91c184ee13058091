"""
Integration tests for the ``forge`` command line (app/main.py).

Each command runs in-process through main(argv); exit codes are 0 ok,
1 a check failed and 2 a usage or configuration error.
"""

import json

import pytest

from app.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


# ---------------------------------------------------------------------------
# derive
# ---------------------------------------------------------------------------


def test_derive_large_energy_tables(run_json):
    code, payload = run_json("derive", "--problem", "mathieu-large", "--order", "5")

    assert code == EXIT_OK
    assert payload["command"] == "derive"
    assert payload["fields"]["regime"] == "large"
    titles = [t["title"] for t in payload["tables"]]
    assert titles[0] == "densities"
    assert any(t.startswith("lambda + O(") for t in titles)
    assert any(t.startswith("sqrt(lambda)") for t in titles)


def test_derive_small_energy_tables(run_json):
    code, payload = run_json("derive", "--problem", "lame-zK", "--order", "2", "--sign", "-1")

    assert code == EXIT_OK
    densities = payload["tables"][0]
    assert [row[0] for row in densities["rows"]] == ["v_-1", "v_0", "v_1", "v_2"]


def test_json_output_is_byte_identical_across_runs(run_cli):
    argv = ("derive", "--problem", "lame-large", "--order", "4", "--format", "json")
    _, first, _ = run_cli(*argv)
    _, second, _ = run_cli(*argv)
    assert first == second


def test_order_above_the_guard_is_a_usage_error(run_cli):
    code, out, err = run_cli("derive", "--problem", "mathieu-large", "--order", "40")
    assert code == EXIT_USAGE
    assert out == ""
    assert "order must be in 1..12" in err


def test_max_order_guard_is_configurable(run_cli, monkeypatch):
    monkeypatch.setenv("FORGE_MAX_ORDER", "3")
    code, _, err = run_cli("derive", "--problem", "free", "--order", "4")
    assert code == EXIT_USAGE
    assert "1..3" in err


def test_unknown_problem_is_rejected_by_the_parser():
    with pytest.raises(SystemExit) as exc:
        main(["derive", "--problem", "hill-3"])
    assert exc.value.code == EXIT_USAGE


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_golden_passes(run_json):
    code, payload = run_json("verify", "golden", "closed-forms")

    assert code == EXIT_OK
    assert payload["fields"]["passed"] is True
    assert payload["fields"]["failed"] == []
    assert "golden-mathieu-large" in payload["fields"]["reports"]


def test_verify_writes_the_report_to_a_file(run_cli, tmp_path):
    target = tmp_path / "report.csv"
    code, out, _ = run_cli("verify", "divisors", "--n-max", "40", "--k", "2", "--format", "csv", "--out", str(target))

    assert code == EXIT_OK
    assert out == ""
    text = target.read_text(encoding="utf-8")
    assert text.startswith("# checks\ncheck,status,checked,budget,first failure\n")


def test_verify_unknown_suite_exits_with_usage(run_cli):
    code, _, err = run_cli("verify", "golden", "nonsense")
    assert code == EXIT_USAGE
    assert "nonsense" in err


def test_verify_reports_a_failed_check(run_cli):
    # a composed tolerance of zero cannot be met by floating point
    code, out, _ = run_cli("verify", "jacobi-map", "--tol", "0")
    assert code == EXIT_FAILED
    assert "FAIL" in out


# ---------------------------------------------------------------------------
# matrix, limits, sweep
# ---------------------------------------------------------------------------


def test_matrix_text_output(run_cli):
    code, out, _ = run_cli("matrix", "--dim", "4")
    assert code == EXIT_OK
    assert "Theta4 k=0" in out
    assert "-ln eta" in out


def test_matrix_json_rows(run_json):
    code, payload = run_json("matrix", "--k", "1", "--dim", "3")
    assert code == EXIT_OK
    assert payload["tables"][0]["rows"][2] == ["2", "1", "1", "0"]


def test_matrix_beyond_dense_limit(run_cli):
    code, _, _ = run_cli("matrix", "--dim", "500")
    assert code == EXIT_USAGE


def test_limits_exact_only(run_json):
    code, payload = run_json("limits", "--order", "3", "--q", "0")
    assert code == EXIT_OK
    assert payload["fields"]["failures"] == {"lame-to-mathieu": []}


def test_sweep_rejects_negative_grid(run_cli):
    code, _, err = run_cli("sweep", "--problem", "mathieu-large", "--nu", "8", "-2")
    assert code == EXIT_USAGE
    assert "positive" in err


def test_logs_go_to_stderr_as_json(run_cli):
    _, out, err = run_cli("matrix", "--dim", "2")
    events = [json.loads(line)["event"] for line in err.splitlines() if line.startswith("{")]
    assert "command_started" in events
    assert "command_finished" in events
    assert "command_started" not in out
