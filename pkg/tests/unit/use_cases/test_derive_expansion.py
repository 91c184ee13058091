import pytest

from app.application.use_cases.derive_expansion import DeriveExpansion, DeriveExpansionRequest
from app.domain.exceptions import InvalidRunConfigError, UnknownProblemError
from app.domain.model.scalars import I, P, Q


def test_large_energy_derivation_returns_every_series():
    result = DeriveExpansion().execute(DeriveExpansionRequest(problem_id="mathieu-large", order=5))

    assert result.regime == "large"
    assert len(result.densities) == 5
    assert result.dispersion.series.coefficient(2) == P("h", 2) * Q(-1, 2)
    assert result.sqrt_lambda.coefficient(-1) == I
    assert result.exponent is not None
    assert result.log_derivative is None


def test_small_energy_derivation_substitutes_the_literature_dispersion():
    result = DeriveExpansion().execute(DeriveExpansionRequest(problem_id="mathieu-minpi2", order=2))

    assert result.regime == "small"
    # v_-1 .. v_order
    assert len(result.densities) == 4
    assert result.log_derivative is not None
    assert result.sqrt_lambda is None


def test_lower_sign_uses_the_other_branch():
    plus = DeriveExpansion().execute(DeriveExpansionRequest(problem_id="lame-z0", order=1, sign=1))
    minus = DeriveExpansion().execute(DeriveExpansionRequest(problem_id="lame-z0", order=1, sign=-1))
    assert minus.sign == -1
    assert str(plus.densities[0]) != str(minus.densities[0])


@pytest.mark.parametrize(
    "request_kwargs",
    [{"order": 0}, {"order": 13}, {"order": 4, "sign": 2}],
    ids=["zero-order", "over-max-order", "bad-sign"],
)
def test_invalid_requests_are_rejected(request_kwargs):
    with pytest.raises(InvalidRunConfigError):
        DeriveExpansion().execute(DeriveExpansionRequest(problem_id="mathieu-large", **request_kwargs))


def test_unknown_problem():
    with pytest.raises(UnknownProblemError):
        DeriveExpansion().execute(DeriveExpansionRequest(problem_id="hill-3", order=2))
