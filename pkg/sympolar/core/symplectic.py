"""Symplectic form, fixed structural matrices and structure predicates.

All matrices use the block layout ``J = [[0, -I], [I, 0]]`` (positions
first, momenta second); every canonical form downstream inherits it.
"""

import logging
from typing import Any

import numpy as np
from scipy.linalg import lu_factor

from sympolar.errors import InvalidDimension, NonFiniteInput

from .enums import StructureKind
from .models import DEFAULT_TOLERANCE, StructureCheck, TolerancePolicy

logger = logging.getLogger(__name__)


def check_mode_count(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidDimension(f"Mode count must be a positive integer, got {n!r}")
    return int(n)


def as_matrix2n(X: Any, *, name: str = "X") -> np.ndarray:
    """Return ``X`` as a float array after checking it is a finite 2n x 2n matrix."""
    arr = np.asarray(X, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidDimension(f"{name} must be square, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[0] % 2:
        raise InvalidDimension(f"{name} must have positive even dimension, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"{name} has NaN or infinite entries")
    return arr


def mode_count(X: np.ndarray) -> int:
    return X.shape[0] // 2


def symplectic_form(n: int) -> np.ndarray:
    n = check_mode_count(n)
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, -eye], [eye, zero]])


def signature_matrix(n: int) -> np.ndarray:
    n = check_mode_count(n)
    return np.diag(np.concatenate([np.ones(n), -np.ones(n)]))


def swap_matrix(n: int) -> np.ndarray:
    n = check_mode_count(n)
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, -eye], [-eye, zero]])


def structure_residual(X: np.ndarray, kind: StructureKind) -> np.ndarray:
    """Defining residual matrix of ``kind``; zero exactly when ``X`` has the structure."""
    J = symplectic_form(mode_count(X))
    if kind is StructureKind.SYMPLECTIC:
        return X @ J @ X.T - J
    if kind is StructureKind.ANTI_SYMPLECTIC:
        return X @ J @ X.T + J
    if kind is StructureKind.HAMILTONIAN:
        JX = J @ X
        return JX.T - JX
    if kind is StructureKind.SKEW_HAMILTONIAN:
        JX = J @ X
        return JX.T + JX
    if kind is StructureKind.SYMMETRIC:
        return X.T - X
    if kind is StructureKind.SKEW_SYMMETRIC:
        return X.T + X
    raise ValueError(f"Unknown structure kind: {kind!r}")


def check_structure(
    X: Any, kind: StructureKind, tol: TolerancePolicy = DEFAULT_TOLERANCE
) -> StructureCheck:
    arr = as_matrix2n(X)
    residual = float(np.linalg.norm(structure_residual(arr, kind)))
    scale = float(np.linalg.norm(arr)) ** 2
    return StructureCheck(kind=kind, residual=residual, bound=tol.bound(scale))


def associated_skew_hamiltonian(X: Any) -> np.ndarray:
    """``Y = -X J X^T J``; skew-Hamiltonian with ``det Y = (det X)^2``."""
    arr = as_matrix2n(X)
    J = symplectic_form(mode_count(arr))
    return -arr @ J @ arr.T @ J


def associated_skew_hamiltonian_left(X: Any) -> np.ndarray:
    """``Y' = -X^T J X J``, the associated matrix of ``X^T``."""
    arr = as_matrix2n(X)
    return associated_skew_hamiltonian(arr.T)


def symplectic_inverse(S: Any) -> np.ndarray:
    """Inverse of a symplectic matrix, ``-J S^T J``."""
    arr = as_matrix2n(S, name="S")
    J = symplectic_form(mode_count(arr))
    return -J @ arr.T @ J


def skew_hamiltonian_part(M: Any) -> np.ndarray:
    arr = as_matrix2n(M, name="M")
    J = symplectic_form(mode_count(arr))
    return 0.5 * (arr - J @ arr.T @ J)


def determinant(X: Any) -> float:
    """Determinant from a pivoted LU factorization; sign from the pivot parity."""
    arr = as_matrix2n(X)
    lu, piv = lu_factor(arr, check_finite=False)
    swaps = int(np.count_nonzero(piv != np.arange(piv.size)))
    sign = -1.0 if swaps % 2 else 1.0
    return sign * float(np.prod(np.diag(lu)))


def is_degenerate(X: Any, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> bool:
    """Scale-invariant rank decision: ``sigma_min <= rel_tol * sigma_max``."""
    arr = as_matrix2n(X)
    singular = np.linalg.svd(arr, compute_uv=False)
    degenerate = bool(singular[-1] <= tol.rel_tol * singular[0]) or singular[0] == 0.0
    if degenerate:
        logger.debug("Degenerate input: sigma_min=%.3e sigma_max=%.3e", singular[-1], singular[0])
    return degenerate


__all__ = [
    "check_mode_count",
    "as_matrix2n",
    "mode_count",
    "symplectic_form",
    "signature_matrix",
    "swap_matrix",
    "structure_residual",
    "check_structure",
    "associated_skew_hamiltonian",
    "associated_skew_hamiltonian_left",
    "symplectic_inverse",
    "skew_hamiltonian_part",
    "determinant",
    "is_degenerate",
]
