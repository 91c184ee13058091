import json

from app.infrastructure.logging import setup_logging


def test_setup_logging_returns_logger():
    logger = setup_logging()
    assert hasattr(logger, "info")
    assert hasattr(logger, "error")
    assert hasattr(logger, "warning")


def test_logs_are_json_on_stderr(capsys):
    logger = setup_logging("DEBUG")
    logger.info("derive_started", problem="mathieu-large", order=4)
    line = capsys.readouterr().err.strip().splitlines()[-1]
    event = json.loads(line)
    assert event["event"] == "derive_started"
    assert event["level"] == "info"
    assert event["order"] == 4


def test_level_filters_lower_events(capsys):
    logger = setup_logging("WARNING")
    logger.info("hidden")
    logger.warning("check_failed", check="parity")
    err = capsys.readouterr().err
    assert "hidden" not in err
    assert "check_failed" in err
