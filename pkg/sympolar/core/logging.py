"""Logging helpers for sympolar.

Usage:
    from sympolar import configure_logging
    configure_logging(level="INFO")

Keeps setup lightweight; callers can further customize the root logger if needed.
"""

import json
import logging
from dataclasses import asdict, is_dataclass
from typing import Any, Mapping, Optional


class _JsonFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:  # type: ignore[override]
        payload: dict[str, Any] = {
            "ts": self.formatTime(record, "%Y-%m-%dT%H:%M:%S"),
            "level": record.levelname,
            "logger": record.name,
            "msg": record.getMessage(),
        }
        report = getattr(record, "report", None)
        if report is not None:
            payload["report"] = report
        return json.dumps(payload, ensure_ascii=False, default=str)


def configure_logging(level: str = "INFO", fmt: Optional[str] = None, json_format: bool = False) -> None:
    """Configure basic logging for applications using sympolar.

    Parameters
    ----------
    level: str
        Logging level name, e.g. "DEBUG"/"INFO"/"WARNING".
    fmt: Optional[str]
        Optional log format string. Defaults to a concise human-friendly format.
        Ignored when ``json_format`` is True.
    json_format: bool
        Emit logs as JSON lines with fields ts/level/logger/msg[/report].
    """

    numeric_level = getattr(logging, level.upper(), logging.INFO)
    if json_format:
        handler = logging.StreamHandler()
        handler.setFormatter(_JsonFormatter())
        logging.basicConfig(level=numeric_level, handlers=[handler], force=True)
    else:
        if fmt is None:
            fmt = (
                "%(asctime)-15s %(levelname)-8s [PID:%(process)d] "
                "[%(filename)s:%(lineno)d - %(funcName)s] %(message)s"
            )
        logging.basicConfig(level=numeric_level, format=fmt, force=True)


def _report_payload(report: object) -> Mapping[str, Any]:
    dump = getattr(report, "model_dump", None)
    if callable(dump):
        return dump(mode="json")
    if is_dataclass(report) and not isinstance(report, type):
        return asdict(report)
    if isinstance(report, Mapping):
        return dict(report)
    return {"value": repr(report)}


def log_report(logger: logging.Logger, report: object, level: str = "INFO", **extra: object) -> None:
    payload = dict(_report_payload(report))
    summary = payload.get("operation", report.__class__.__name__)
    verdict = payload.get("verdict")
    message = f"{summary} verdict={verdict}" if verdict is not None else str(summary)
    logger.log(getattr(logging, level.upper(), logging.INFO), message, extra={"report": payload, **extra})


__all__ = ["configure_logging", "log_report"]
