from pathlib import Path

import pytest

from sympolar.configuration.config_file import load_config_dict, load_config_file, loads_jsonc


def test_loads_jsonc_supports_comments_and_trailing_commas() -> None:
    data = loads_jsonc(
        """
        {
          // line comment
          "tolerance": {"rel_tol": 1e-8,},
          "note": "a // inside a string stays",
          /* block comment */
          "timestamp": false,
        }
        """
    )
    assert data["tolerance"] == {"rel_tol": 1e-8}
    assert data["note"] == "a // inside a string stays"
    assert data["timestamp"] is False


def test_loads_jsonc_rejects_broken_json() -> None:
    with pytest.raises(ValueError, match="Invalid config JSON"):
        loads_jsonc('{"jobs": }')


def test_load_config_dict_resolves_local_refs(tmp_path: Path) -> None:
    (tmp_path / "base.jsonc").write_text(
        """
        {
          "rel_tol": 1e-10,
          "imag_tol": 1e-11,
        }
        """,
        encoding="utf-8",
    )
    (tmp_path / "profile.jsonc").write_text(
        """
        {
          "tolerance": {
            "$ref": "./base.jsonc",
            "rel_tol": 1e-7
          }
        }
        """,
        encoding="utf-8",
    )

    cfg = load_config_dict(tmp_path / "profile.jsonc")
    assert cfg["tolerance"]["rel_tol"] == 1e-7
    assert cfg["tolerance"]["imag_tol"] == 1e-11


def test_load_config_dict_detects_ref_cycle(tmp_path: Path) -> None:
    (tmp_path / "a.jsonc").write_text('{"$ref":"./b.jsonc"}', encoding="utf-8")
    (tmp_path / "b.jsonc").write_text('{"$ref":"./a.jsonc"}', encoding="utf-8")

    with pytest.raises(ValueError, match="Cyclic \\$ref"):
        load_config_dict(tmp_path / "a.jsonc")


def test_load_config_dict_requires_an_object(tmp_path: Path) -> None:
    path = tmp_path / "list.json"
    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ValueError, match="must be an object"):
        load_config_dict(path)


def test_load_config_file_without_path_is_empty() -> None:
    assert load_config_file(None) == {}
