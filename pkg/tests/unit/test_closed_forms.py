import pytest

from app.domain.data.closed_forms import CLOSED_FORMS, closed_form
from app.domain.exceptions import UnknownProblemError
from app.domain.model.jacobi import JacobiElem
from app.domain.model.scalars import I, P
from app.domain.services.closed_forms import (
    density_series_for,
    log_derivative,
    verify_closed_form,
    verify_entry,
    zero_candidate,
)
from app.domain.services.func_rings import ring_diff


@pytest.mark.parametrize("entry", CLOSED_FORMS, ids=[e.name for e in CLOSED_FORMS])
@pytest.mark.parametrize("sign", [1, -1], ids=["plus", "minus"])
def test_printed_wave_functions_match_the_densities(entry, sign):
    report = verify_entry(entry, sign)

    assert report.passed, [c for c in report.checks if c.status != "match"]
    assert report.checks
    assert report.details["sign"] == ("+" if sign > 0 else "-")


def test_candidate_for_another_minimum_fails():
    candidate = closed_form("mathieu-min0-delta").candidate(1)
    series = density_series_for(closed_form("mathieu-minpi2-delta"), 1)

    report = verify_closed_form(candidate, series)

    assert not report.passed
    assert any(c.status == "mismatch" and c.residual != "0" for c in report.checks)


def test_orders_beyond_the_series_are_mismatches():
    entry = closed_form("mathieu-minpi2-delta")
    series = density_series_for(entry, 1, order=0)

    report = verify_closed_form(entry.candidate(1), series)

    assert any("known only below" in c.residual for c in report.checks)


def test_empty_candidate_checks_nothing():
    series = density_series_for(closed_form("lame-z0-Lambda"), 1)
    report = verify_closed_form(zero_candidate(), series)
    assert report.checks == ()


def test_log_derivative_table_is_consistent_with_ring_calculus():
    # d/dz ln sn = cn dn / sn
    sn = JacobiElem.sn()
    assert log_derivative("sn") == ring_diff(sn) / sn
    assert log_derivative("dn+i*k*sn").trig is False
    assert log_derivative("dn-i*k*sn") == -log_derivative("dn+i*k*sn")
    assert log_derivative("dn+i*k*sn") == JacobiElem.monomial(I * P("k"), cn=1)


def test_unknown_names_raise():
    with pytest.raises(UnknownProblemError):
        closed_form("mathieu-nowhere")
    with pytest.raises(KeyError):
        log_derivative("tanh")
