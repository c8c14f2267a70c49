"""JSON documents for matrices and channel triples.

A matrix document::

    {"n": 1, "rows": [[0.0, -1.0], [1.0, 0.0]]}

A channel document adds ``l`` and ``alpha``; ``rows`` then holds ``K``.
Floats are written with ``repr`` precision so every double round-trips.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from sympolar.channels.gaussian import GaussianChannelTriple
from sympolar.errors import DocumentError

PathLike = Union[str, Path]


def _finite(values: list[float], name: str) -> None:
    if not all(math.isfinite(v) for v in values):
        raise ValueError(f"{name} has NaN or infinite entries")


def _check_square(rows: list[list[float]], size: int, name: str) -> None:
    if len(rows) != size or any(len(row) != size for row in rows):
        raise ValueError(f"{name} must be {size} rows of {size} numbers")
    for row in rows:
        _finite(row, name)


class MatrixFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=1)
    rows: list[list[float]]
    l: Optional[list[float]] = None  # noqa: E741
    alpha: Optional[list[list[float]]] = None
    label: Optional[str] = None
    kind: Optional[str] = None
    seed: Optional[int] = None

    @model_validator(mode="after")
    def _check_shapes(self) -> "MatrixFile":
        size = 2 * self.n
        _check_square(self.rows, size, "rows")
        if (self.l is None) != (self.alpha is None):
            raise ValueError("channel documents carry all of K, l and alpha")
        if self.l is not None:
            if len(self.l) != size:
                raise ValueError(f"l must have {size} entries")
            _finite(self.l, "l")
        if self.alpha is not None:
            _check_square(self.alpha, size, "alpha")
        return self

    @property
    def is_channel(self) -> bool:
        return self.l is not None

    def matrix(self) -> np.ndarray:
        return np.array(self.rows, dtype=float)

    def channel(self) -> GaussianChannelTriple:
        if self.l is None or self.alpha is None:
            raise DocumentError("document is a plain matrix, not a channel triple")
        return GaussianChannelTriple(K=self.matrix(), l=np.array(self.l), alpha=np.array(self.alpha))

    @classmethod
    def from_matrix(cls, X: np.ndarray, **metadata: Any) -> "MatrixFile":
        arr = np.asarray(X, dtype=float)
        return cls(n=arr.shape[0] // 2, rows=arr.tolist(), **metadata)

    @classmethod
    def from_channel(cls, c: GaussianChannelTriple, **metadata: Any) -> "MatrixFile":
        return cls(n=c.n, rows=c.K.tolist(), l=c.l.tolist(), alpha=c.alpha.tolist(), **metadata)


def dump_document(document: BaseModel) -> str:
    payload = document.model_dump(exclude_none=True)
    return json.dumps(payload, indent=2) + "\n"


def parse_matrix_file(text: str, *, source: str = "<string>") -> MatrixFile:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{source}: invalid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise DocumentError(f"{source}: document must be a JSON object")
    try:
        return MatrixFile.model_validate(payload)
    except ValidationError as exc:
        raise DocumentError(f"{source}: {exc}") from exc


def load_matrix_file(path: PathLike) -> MatrixFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"Cannot read {path}: {exc}") from exc
    return parse_matrix_file(text, source=str(path))


def write_document(path: PathLike, document: BaseModel) -> None:
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(dump_document(document), encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"Cannot write {path}: {exc}") from exc


__all__ = [
    "MatrixFile",
    "dump_document",
    "parse_matrix_file",
    "load_matrix_file",
    "write_document",
]
