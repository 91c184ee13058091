"""Use-case results as exporter documents. Cells are formatted here, once."""

from __future__ import annotations

from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from app.application.ports.report_exporter import Document, Table
from app.application.use_cases.build_theta_matrix import BuildThetaMatrixResult
from app.application.use_cases.derive_expansion import DeriveExpansionResult
from app.application.use_cases.run_limit_checks import RunLimitChecksResult
from app.application.use_cases.run_oracle_sweep import RunOracleSweepResult
from app.application.use_cases.run_verification import RunVerificationResult
from app.domain.model.reports import CheckReport
from app.domain.model.series import TruncatedSeries


def fmt_number(value: Any) -> str:
    if isinstance(value, complex):
        if value.imag == 0:
            return f"{value.real:.15g}"
        return f"{value.real:.15g}{value.imag:+.15g}j"
    if isinstance(value, float):
        return f"{value:.15g}"
    return str(value)


def _series_table(title: str, series: Optional[TruncatedSeries]) -> Tuple[Table, ...]:
    if series is None:
        return ()
    rows = tuple((f"{series.symbol}^{p}", str(c)) for p, c in series.items() if not c.is_zero())
    return (Table(title=f"{title} + O({series.symbol}^{series.order})", columns=("term", "coefficient"), rows=rows),)


def _density_table(densities: Sequence[Any], first: int) -> Table:
    rows = tuple((f"v_{ell}", str(v)) for ell, v in enumerate(densities, start=first))
    return Table(title="densities", columns=("index", "density"), rows=rows)


def derive_document(result: DeriveExpansionResult) -> Document:
    first = 1 if result.regime == "large" else -1
    tables: List[Table] = [_density_table(result.densities, first)]
    if result.dispersion is not None:
        label = "lambda" if result.regime == "large" else f"{result.dispersion.spectral} (literature)"
        tables += _series_table(label, result.dispersion.series)
    tables += _series_table("sqrt(lambda)", result.sqrt_lambda)
    tables += _series_table("exponent", result.exponent)
    tables += _series_table("d/dx ln psi", result.log_derivative)
    return Document(
        command="derive",
        fields={
            "problem": result.problem_id,
            "regime": result.regime,
            "order": result.order,
            "sign": result.sign,
        },
        tables=tuple(tables),
    )


def _report_fields(report: CheckReport) -> Dict[str, Any]:
    return {
        "passed": report.passed,
        "checked": report.checked,
        "budget": report.budget,
        "failures": list(report.failures),
        "details": report.details,
    }


def _check_rows(reports: Iterable[CheckReport]) -> Tuple[Tuple[str, ...], ...]:
    return tuple(
        (
            r.name,
            "pass" if r.passed else "FAIL",
            str(r.checked),
            "" if r.budget is None else fmt_number(r.budget),
            r.failures[0] if r.failures else "",
        )
        for r in reports
    )


def verify_document(result: RunVerificationResult) -> Document:
    table = Table(
        title="checks",
        columns=("check", "status", "checked", "budget", "first failure"),
        rows=_check_rows(result.reports),
    )
    return Document(
        command="verify",
        fields={
            "passed": result.passed,
            "checks": len(result.reports),
            "failed": [r.name for r in result.failed],
            "reports": {r.name: _report_fields(r) for r in result.reports},
        },
        tables=(table,),
    )


def matrix_document(result: BuildThetaMatrixResult) -> Document:
    matrix = result.matrix
    columns = ("i\\j",) + tuple(str(j) for j in range(matrix.dim))
    rows = tuple((str(i),) + tuple(str(c) for c in row) for i, row in enumerate(matrix.entries))
    eta_rows = tuple((str(n), str(c)) for n, c in enumerate(result.log_eta, start=1))
    return Document(
        command="matrix",
        fields={"k": matrix.k, "dim": matrix.dim, "nonzero": sum(1 for _ in matrix.nonzero())},
        tables=(
            Table(title=f"Theta4 k={matrix.k}", columns=columns, rows=rows),
            Table(title="-ln eta", columns=("n", "coefficient"), rows=eta_rows),
        ),
    )


def limits_document(result: RunLimitChecksResult) -> Document:
    tables = tuple(
        Table(
            title=report.name,
            columns=("q", "error", "budget", "status"),
            rows=tuple(
                (fmt_number(s.q), fmt_number(s.error), fmt_number(s.budget), "pass" if s.passed else "FAIL")
                for s in report.samples
            ),
        )
        for report in result.reports
    )
    return Document(
        command="limits",
        fields={
            "passed": result.passed,
            "failures": {r.name: list(r.failures) for r in result.reports},
        },
        tables=tables,
    )


def sweep_document(result: RunOracleSweepResult) -> Document:
    sweep = result.sweep
    rows = tuple(
        (
            fmt_number(p.variable),
            fmt_number(p.series_value),
            fmt_number(p.oracle_value),
            fmt_number(p.abs_err),
            fmt_number(p.omitted_term_bound),
        )
        for p in sweep.points
    )
    return Document(
        command="sweep",
        fields={
            "name": sweep.name,
            "passed": result.check.passed,
            "slope": sweep.slope,
            "predicted_slope": sweep.predicted_slope,
            "constant": sweep.constant,
            "failures": list(result.check.failures),
        },
        tables=(
            Table(
                title=sweep.name,
                columns=("variable", "series", "oracle", "abs_err", "omitted_term"),
                rows=rows,
            ),
        ),
    )
