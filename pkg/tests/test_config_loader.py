import json
from pathlib import Path

import pytest

from sympolar import RunSettings, load_settings_from_dict, load_settings_from_json
from sympolar.core import TolerancePolicy


def test_defaults() -> None:
    settings = load_settings_from_dict({})
    assert settings == RunSettings()
    assert settings.tolerance == TolerancePolicy(rel_tol=1e-9, imag_tol=1e-9)
    assert settings.jobs == 1
    assert settings.timestamp is True


def test_load_settings_from_json_with_refs(tmp_path: Path) -> None:
    (tmp_path / "tolerance.jsonc").write_text('{"rel_tol": 1e-7, // loose\n}', encoding="utf-8")
    cfg = {
        "tolerance": {"$ref": "./tolerance.jsonc", "imag_tol": 1e-6},
        "jobs": 4,
        "timestamp": False,
        "logging": {"level": "debug", "json": True},
    }
    path = tmp_path / "settings.json"
    path.write_text(json.dumps(cfg), encoding="utf-8")

    settings = load_settings_from_json(path)
    assert settings.tolerance == TolerancePolicy(rel_tol=1e-7, imag_tol=1e-6)
    assert settings.jobs == 4
    assert settings.timestamp is False
    assert settings.log_level == "DEBUG"
    assert settings.json_logs is True


@pytest.mark.parametrize(
    "cfg, message",
    [
        ({"tolerances": {}}, "Unknown config keys"),
        ({"tolerance": []}, "tolerance must be an object"),
        ({"tolerance": {"rel_tol": 0}}, "tolerance.rel_tol"),
        ({"tolerance": {"imag_tol": "small"}}, "tolerance.imag_tol"),
        ({"jobs": 0}, "jobs"),
        ({"jobs": True}, "jobs"),
        ({"timestamp": "yes"}, "timestamp"),
        ({"logging": {"json": True}}, "Missing required config key: 'level'"),
    ],
)
def test_invalid_settings_are_rejected(cfg: dict, message: str) -> None:
    with pytest.raises(ValueError, match=message):
        load_settings_from_dict(cfg)


def test_command_line_overrides_win() -> None:
    base = load_settings_from_dict({"tolerance": {"rel_tol": 1e-6, "imag_tol": 1e-5}, "jobs": 3})
    settings = base.with_overrides(rel_tol=1e-10, timestamp=False)
    assert settings.tolerance == TolerancePolicy(rel_tol=1e-10, imag_tol=1e-5)
    assert settings.jobs == 3
    assert settings.timestamp is False
    assert base.with_overrides() == base
    with pytest.raises(ValueError):
        base.with_overrides(jobs=0)
