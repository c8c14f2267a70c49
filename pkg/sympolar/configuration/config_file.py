"""JSON/JSONC run-configuration files.

Comments (``//`` and ``/* */``) and trailing commas are accepted. An object
may pull in another file with ``{"$ref": "./base.jsonc", ...}``; keys next to
the reference override the referenced ones.
"""

import json
import re
from pathlib import Path
from typing import Any, Mapping, Optional, Union

PathLike = Union[str, Path]

_TRAILING_COMMA = re.compile(r",(\s*[}\]])")


def _strip_comments(text: str) -> str:
    out: list[str] = []
    i = 0
    in_string = False
    while i < len(text):
        ch = text[i]
        if in_string:
            out.append(ch)
            if ch == "\\" and i + 1 < len(text):
                out.append(text[i + 1])
                i += 2
                continue
            if ch == '"':
                in_string = False
            i += 1
            continue
        if ch == '"':
            in_string = True
            out.append(ch)
            i += 1
        elif text.startswith("//", i):
            end = text.find("\n", i)
            i = len(text) if end < 0 else end
        elif text.startswith("/*", i):
            end = text.find("*/", i + 2)
            if end < 0:
                raise ValueError("Unterminated block comment in config")
            i = end + 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def _strip_trailing_commas(text: str) -> str:
    # Only outside strings: split on quoted segments and patch the gaps.
    parts = re.split(r'("(?:\\.|[^"\\])*")', text)
    return "".join(part if idx % 2 else _TRAILING_COMMA.sub(r"\1", part) for idx, part in enumerate(parts))


def loads_jsonc(text: str) -> Any:
    cleaned = _strip_trailing_commas(_strip_comments(text))
    try:
        return json.loads(cleaned)
    except json.JSONDecodeError as exc:
        raise ValueError(f"Invalid config JSON: {exc}") from exc


def _resolve_refs(value: Any, base_dir: Path, stack: tuple[Path, ...]) -> Any:
    if isinstance(value, Mapping):
        ref = value.get("$ref")
        merged: dict[str, Any] = {}
        if ref is not None:
            if not isinstance(ref, str) or not ref:
                raise ValueError("$ref must be a non-empty string")
            referenced = _load_resolved(base_dir / ref, stack)
            if not isinstance(referenced, Mapping):
                raise ValueError(f"$ref target {ref} must contain an object")
            merged.update(referenced)
        for key, one in value.items():
            if key == "$ref":
                continue
            merged[key] = _resolve_refs(one, base_dir, stack)
        return merged
    if isinstance(value, list):
        return [_resolve_refs(one, base_dir, stack) for one in value]
    return value


def _load_resolved(path: Path, stack: tuple[Path, ...]) -> Any:
    resolved = path.resolve()
    if resolved in stack:
        chain = " -> ".join(str(p) for p in stack + (resolved,))
        raise ValueError(f"Cyclic $ref: {chain}")
    try:
        text = resolved.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"Cannot read config file {path}: {exc}") from exc
    return _resolve_refs(loads_jsonc(text), resolved.parent, stack + (resolved,))


def load_config_dict(path: PathLike) -> dict[str, Any]:
    data = _load_resolved(Path(path), ())
    if not isinstance(data, dict):
        raise ValueError("Config JSON must be an object")
    return data


def load_config_file(path: Optional[PathLike]) -> dict[str, Any]:
    """Like :func:`load_config_dict`, but ``None`` means an empty configuration."""
    if path is None:
        return {}
    return load_config_dict(path)


__all__ = ["loads_jsonc", "load_config_dict", "load_config_file"]
