"""
Derived coefficients against the printed tables in ``app.domain.data.golden``.

All comparisons are exact. Exponents are compared through their x-derivative,
so constants of integration never count.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Callable, List, Optional

from app.domain.data.golden import (
    EXTENDED_MARKER,
    EXTENDED_TABLES,
    LARGE_TABLES,
    SMALL_TABLES,
    mathieu_large_sqrt_lambda,
)
from app.domain.exceptions import UnknownProblemError
from app.domain.model.reports import CheckReport
from app.domain.model.series import TruncatedSeries
from app.domain.services.dispersion import large_energy_expansion, sqrt_lambda_series
from app.domain.services.func_rings import ring_diff, ring_equal
from app.domain.services.problem_catalog import get_problem
from app.domain.services.riccati import density_table


def _scalar_failures(label: str, derived: TruncatedSeries, printed: TruncatedSeries) -> List[str]:
    if derived.order < printed.order:
        return [f"{label}: derived series stops at order {derived.order}, table reaches {printed.order}"]
    failures = []
    for power, want in printed.items():
        got = derived.coefficient(power)
        if not (got - want).is_zero():
            failures.append(f"{label} {printed.symbol}^{power}: derived {got}, printed {want}")
    return failures


def _exponent_failures(label: str, derived: TruncatedSeries, printed: TruncatedSeries) -> List[str]:
    if derived.order < printed.order:
        return [f"{label}: derived exponent stops at order {derived.order}, table reaches {printed.order}"]
    return [
        f"{label} {printed.symbol}^{power}: derived {derived.coefficient(power)}, printed {want}"
        for power, want in printed.items()
        if not ring_equal(ring_diff(derived.coefficient(power)), ring_diff(want))
    ]


def _large_check(
    name: str,
    problem_id: str,
    printed_lambda: TruncatedSeries,
    printed_sqrt: Optional[TruncatedSeries],
    exponent_table: Callable[[int], TruncatedSeries],
) -> CheckReport:
    potential = get_problem(problem_id).potential
    order = printed_lambda.order + 1

    failures: List[str] = []
    checked = 0
    dispersion, plus = large_energy_expansion(potential, order, sign=1)
    failures += _scalar_failures("lambda", dispersion.series, printed_lambda)
    checked += len(printed_lambda.coeffs)
    if printed_sqrt is not None:
        failures += _scalar_failures("sqrt(lambda)", sqrt_lambda_series(dispersion), printed_sqrt)
        checked += len(printed_sqrt.coeffs)
    _, minus = large_energy_expansion(potential, order, sign=-1)
    for sign, exponent in ((1, plus), (-1, minus)):
        printed = exponent_table(sign)
        failures += _exponent_failures("psi+" if sign > 0 else "psi-", exponent.series, printed)
        checked += len(printed.coeffs)
    return CheckReport(name=name, checked=checked, failures=tuple(failures))


def large_golden_check(problem_id: str) -> CheckReport:
    """λ(ν), √λ(ν) (Mathieu) and both exponents ψ± against the printed large-energy tables."""
    if problem_id not in LARGE_TABLES:
        raise UnknownProblemError(f"no printed large-energy table for {problem_id!r}")
    dispersion_table, exponent_table = LARGE_TABLES[problem_id]
    printed_sqrt = mathieu_large_sqrt_lambda() if problem_id == "mathieu-large" else None
    return _large_check(f"golden-{problem_id}", problem_id, dispersion_table(), printed_sqrt, exponent_table)


def extended_golden_check(problem_id: str) -> CheckReport:
    """The same comparison against the extended tables, which reach past the printed orders."""
    if problem_id not in EXTENDED_TABLES:
        raise UnknownProblemError(f"no extended large-energy table for {problem_id!r}")
    dispersion_table, sqrt_table, exponent_table = EXTENDED_TABLES[problem_id]
    report = _large_check(
        f"golden-extended-{problem_id}", problem_id, dispersion_table(), sqrt_table(), exponent_table
    )
    return replace(report, details={"provenance": EXTENDED_MARKER})


def small_golden_check(problem_id: str) -> CheckReport:
    """v₋₁..v₂ with the overall unit divided out against the printed density table."""
    if problem_id not in SMALL_TABLES:
        raise UnknownProblemError(f"no printed density table for {problem_id!r}")
    problem = get_problem(problem_id).small
    if problem is None:
        raise UnknownProblemError(f"{problem_id} has no small-energy expansion")
    printed = SMALL_TABLES[problem_id]()
    derived = density_table(problem, len(printed) - 2)
    failures = [
        f"v_{ell}: derived {got}, printed {want}"
        for ell, (got, want) in enumerate(zip(derived, printed), start=-1)
        if not ring_equal(got, want)
    ]
    return CheckReport(name=f"golden-{problem_id}", checked=len(printed), failures=tuple(failures))


def golden_suite() -> List[CheckReport]:
    return (
        [large_golden_check(p) for p in LARGE_TABLES]
        + [extended_golden_check(p) for p in EXTENDED_TABLES]
        + [small_golden_check(p) for p in SMALL_TABLES]
    )
