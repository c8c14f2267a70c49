"""Run settings built from config dictionaries with lightweight validation."""

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Mapping, Optional, Union

from sympolar.core.models import TolerancePolicy

from .config_file import load_config_dict

_KNOWN_KEYS = {"tolerance", "jobs", "timestamp", "logging"}


@dataclass(frozen=True)
class RunSettings:
    tolerance: TolerancePolicy = field(default_factory=TolerancePolicy)
    jobs: int = 1
    timestamp: bool = True
    log_level: str = "INFO"
    json_logs: bool = False

    def with_overrides(
        self,
        *,
        rel_tol: Optional[float] = None,
        imag_tol: Optional[float] = None,
        jobs: Optional[int] = None,
        timestamp: Optional[bool] = None,
    ) -> "RunSettings":
        """Apply explicit command-line values on top of these settings."""
        tolerance = self.tolerance
        if rel_tol is not None or imag_tol is not None:
            tolerance = TolerancePolicy(
                rel_tol=tolerance.rel_tol if rel_tol is None else rel_tol,
                imag_tol=tolerance.imag_tol if imag_tol is None else imag_tol,
            )
        return replace(
            self,
            tolerance=tolerance,
            jobs=self.jobs if jobs is None else _positive_int(jobs, field_name="jobs"),
            timestamp=self.timestamp if timestamp is None else timestamp,
        )


def _require(mapping: Mapping[str, Any], key: str) -> Any:
    if key not in mapping:
        raise ValueError(f"Missing required config key: '{key}'")
    return mapping[key]


def _as_object(value: Any, *, field_name: str) -> Mapping[str, Any]:
    if not isinstance(value, Mapping):
        raise ValueError(f"{field_name} must be an object")
    return value


def _positive_float(value: Any, *, field_name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not value > 0:
        raise ValueError(f"{field_name} must be a positive number")
    return float(value)


def _positive_int(value: Any, *, field_name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError(f"{field_name} must be a positive integer")
    return value


def _as_bool(value: Any, *, field_name: str) -> bool:
    if not isinstance(value, bool):
        raise ValueError(f"{field_name} must be true or false")
    return value


def _build_tolerance(cfg: Mapping[str, Any]) -> TolerancePolicy:
    defaults = TolerancePolicy()
    return TolerancePolicy(
        rel_tol=_positive_float(cfg.get("rel_tol", defaults.rel_tol), field_name="tolerance.rel_tol"),
        imag_tol=_positive_float(cfg.get("imag_tol", defaults.imag_tol), field_name="tolerance.imag_tol"),
    )


def load_settings_from_dict(config: Mapping[str, Any]) -> RunSettings:
    cfg = _as_object(config, field_name="config")
    unknown = sorted(set(cfg) - _KNOWN_KEYS)
    if unknown:
        raise ValueError(f"Unknown config keys: {', '.join(unknown)}")

    settings = RunSettings()
    if "tolerance" in cfg:
        settings = replace(settings, tolerance=_build_tolerance(_as_object(cfg["tolerance"], field_name="tolerance")))
    if "jobs" in cfg:
        settings = replace(settings, jobs=_positive_int(cfg["jobs"], field_name="jobs"))
    if "timestamp" in cfg:
        settings = replace(settings, timestamp=_as_bool(cfg["timestamp"], field_name="timestamp"))
    if "logging" in cfg:
        log_cfg = _as_object(cfg["logging"], field_name="logging")
        level = _require(log_cfg, "level")
        if not isinstance(level, str) or not level:
            raise ValueError("logging.level must be a non-empty string")
        settings = replace(
            settings,
            log_level=level.upper(),
            json_logs=_as_bool(log_cfg.get("json", False), field_name="logging.json"),
        )
    return settings


def load_settings_from_json(path: Union[Path, str]) -> RunSettings:
    """Load RunSettings from a JSON/JSONC config file with validation."""

    return load_settings_from_dict(load_config_dict(path))


__all__ = ["RunSettings", "load_settings_from_dict", "load_settings_from_json"]
