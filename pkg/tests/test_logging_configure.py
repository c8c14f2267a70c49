import json
import logging

import pytest

from sympolar.analytics.report import ReportDocument
from sympolar.core.logging import configure_logging, log_report


def test_configure_logging_plain_and_json() -> None:
    # plain
    configure_logging(level="DEBUG")
    logger = logging.getLogger("sympolar.test")
    logger.debug("hello")

    # json
    configure_logging(level="INFO", json_format=True)
    logger.info("world")


def test_json_lines_carry_the_report(capsys: pytest.CaptureFixture[str]) -> None:
    configure_logging(level="INFO", json_format=True)
    report = ReportDocument(operation="decompose", verdict="ok", variant="MS")
    log_report(logging.getLogger("sympolar.test"), report)

    line = capsys.readouterr().err.strip().splitlines()[-1]
    payload = json.loads(line)
    assert payload["level"] == "INFO"
    assert payload["msg"] == "decompose verdict=ok"
    assert payload["report"]["variant"] == "MS"
    logging.getLogger().handlers.clear()


def test_log_report_accepts_plain_mappings(caplog: pytest.LogCaptureFixture) -> None:
    logger = logging.getLogger("sympolar.test")
    with caplog.at_level(logging.WARNING, logger="sympolar.test"):
        log_report(logger, {"operation": "verify", "verdict": "fail"}, level="WARNING")
    assert caplog.records[-1].getMessage() == "verify verdict=fail"
    assert caplog.records[-1].report == {"operation": "verify", "verdict": "fail"}
