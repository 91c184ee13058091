import json

import pytest

from app.config import get_settings
from app.main import main


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def run_cli(capsys):
    """Runs ``forge`` in-process; returns (exit code, stdout, stderr)."""

    def _run(*argv: str):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def run_json(run_cli):
    def _run(*argv: str):
        code, out, err = run_cli(*argv, "--format", "json")
        return code, json.loads(out) if out else None

    return _run
