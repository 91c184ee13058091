import pytest
import structlog


@pytest.fixture(autouse=True)
def reset_structlog():
    """setup_logging() binds structlog to the current (captured) stderr; undo it per test."""
    yield
    structlog.reset_defaults()
