from app.application.use_cases.build_theta_matrix import BuildThetaMatrix, BuildThetaMatrixRequest
from app.application.use_cases.run_limit_checks import RunLimitChecksResult
from app.application.use_cases.run_oracle_sweep import RunOracleSweepResult
from app.application.use_cases.run_verification import RunVerificationResult
from app.cli import presenters
from app.domain.model.reports import CheckReport
from tests.helpers.report_fixtures import make_check_reports, make_limit_report, make_sweep_report


def test_number_formatting():
    assert presenters.fmt_number(0.5) == "0.5"
    assert presenters.fmt_number(complex(2, 0)) == "2"
    assert presenters.fmt_number(complex(1, -0.5)) == "1-0.5j"
    assert presenters.fmt_number(7) == "7"


def test_verify_document_lists_failed_checks():
    result = RunVerificationResult(reports=tuple(make_check_reports()), elapsed_s=0.1)
    document = presenters.verify_document(result)

    assert document.fields["passed"] is False
    assert document.fields["failed"] == ["parity-lame-large"]
    rows = document.tables[0].rows
    assert rows[1][:3] == ("parity-lame-large", "FAIL", "5")
    assert rows[1][4] == "order 3: 2*alpha"
    assert rows[2][3] == "1e-10"


def test_matrix_document_has_matrix_and_eta_tables():
    result = BuildThetaMatrix().execute(BuildThetaMatrixRequest(dim=3))
    document = presenters.matrix_document(result)
    matrix, eta = document.tables
    assert matrix.columns == ("i\\j", "0", "1", "2")
    assert matrix.rows[1] == ("1", "1", "1", "1")
    assert eta.rows == (("1", "1"), ("2", "3/2"))


def test_limits_document_marks_each_sample():
    document = presenters.limits_document(RunLimitChecksResult(reports=(make_limit_report(),)))
    assert document.fields["passed"] is True
    assert [row[3] for row in document.tables[0].rows] == ["pass", "pass"]


def test_sweep_document_carries_the_fit():
    check = CheckReport(name="oracle-mathieu-large", checked=3)
    document = presenters.sweep_document(RunOracleSweepResult(sweep=make_sweep_report(), check=check))
    assert document.fields["slope"] == 9.0
    assert document.tables[0].rows[0][0] == "6"
