import pytest
from app.domain.exceptions import (
    DomainException,
    IntegrationError,
    InvalidRunConfigError,
    ResidualError,
    SeriesSymbolMismatchError,
    TruncationError,
    UnknownProblemError,
)


def test_domain_exception_is_value_error():
    assert issubclass(DomainException, ValueError)


@pytest.mark.parametrize(
    "exc_type",
    [SeriesSymbolMismatchError, TruncationError, ResidualError, IntegrationError, UnknownProblemError, InvalidRunConfigError],
)
def test_errors_are_domain_exceptions(exc_type):
    assert issubclass(exc_type, DomainException)


def test_exception_preserves_message():
    exc = TruncationError("order must be >= 1")
    assert str(exc) == "order must be >= 1"

    exc2 = UnknownProblemError("no problem named 'x'")
    assert str(exc2) == "no problem named 'x'"
