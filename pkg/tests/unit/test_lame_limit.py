import pytest

from app.domain.data.golden import shifted_wp_qexpansion
from app.domain.exceptions import TruncationError
from app.domain.model.fourier import FourierTrigPoly
from app.domain.model.reports import LimitSample
from app.domain.model.scalars import P, Q
from app.domain.services.lame_limit import (
    decay_budgets,
    lame_to_mathieu_limit,
    lattice_qseries,
    limit_scalar,
    potential_limit_failures,
    qexpansion_check,
    shifted_wp_qseries,
    shifted_zeta_qseries,
)


def test_shifted_wp_series_matches_the_printed_expansion():
    assert shifted_wp_qseries(4) == shifted_wp_qexpansion()


def test_shifted_zeta_constant():
    series = shifted_zeta_qseries(3)
    assert series.coefficient(0) == FourierTrigPoly.constant(Q(-1, imag=True))
    assert series.coefficient(1) == FourierTrigPoly.sin(2, 4)


def test_lattice_series_from_eisenstein():
    lattice = lattice_qseries(3)
    assert lattice["zeta1"].coefficient(0) == Q(1, 3)
    assert lattice["zeta1"].coefficient(2) == -8
    assert lattice["g2"].coefficient(2) == 320


def test_alpha_scales_as_inverse_half_nome():
    series = limit_scalar(P("alpha"), 1)
    assert series.coefficient(-1) == -P("h") * Q(1, 4)
    with pytest.raises(TruncationError):
        limit_scalar(P("alpha"), 0)


def test_lame_potential_tends_to_mathieu():
    assert potential_limit_failures() == []


def test_exact_limits_without_samples():
    report = lame_to_mathieu_limit(check_order=4, q_samples=())
    assert report.passed, report.failures
    assert report.samples == ()


def test_qexpansion_error_settles_like_q_squared():
    report = qexpansion_check()
    assert report.passed, report.failures
    assert len(report.samples) == 3


@pytest.mark.slow
def test_full_limit_with_numeric_samples():
    report = lame_to_mathieu_limit(check_order=4)
    assert report.passed, report.failures
    assert [s.q for s in report.samples] == [1e-2, 1e-3, 1e-4]


def test_check_order_must_be_positive():
    with pytest.raises(TruncationError):
        lame_to_mathieu_limit(check_order=0, q_samples=())


_DECADES = [1e-2, 1e-3, 1e-4]


@pytest.mark.parametrize(
    "errors",
    [
        [1.33, 0.282, 0.0792],  # lambda at h = 1, order 4
        [4.02, 0.793, 0.215],  # exponent at h = 1, order 4
    ],
)
def test_decay_budgets_accept_half_power_convergence(errors):
    budgets = decay_budgets(_DECADES, errors)
    assert budgets[0] == pytest.approx(errors[0])
    assert all(LimitSample(q=q, error=e, budget=b).passed for q, e, b in zip(_DECADES, errors, budgets))


def test_decay_budgets_reject_a_stalled_error():
    errors = [1.33, 1.2, 1.1]
    budgets = decay_budgets(_DECADES, errors)
    assert not LimitSample(q=1e-3, error=errors[1], budget=budgets[1]).passed
    assert not LimitSample(q=1e-4, error=errors[2], budget=budgets[2]).passed


def test_decay_budgets_anchor_on_the_largest_q():
    budgets = decay_budgets([1e-4, 1e-2], [0.1, 1.0])
    assert budgets[1] == pytest.approx(1.0)
    assert budgets[0] == pytest.approx(10 ** (-0.8))
    with pytest.raises(TruncationError):
        decay_budgets(_DECADES, [1.0])
