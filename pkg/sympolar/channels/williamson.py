"""Williamson normal form of a positive definite symmetric matrix."""

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy.linalg import eigh

from sympolar.core.enums import StructureKind
from sympolar.core.models import DEFAULT_TOLERANCE, TolerancePolicy
from sympolar.core.symplectic import as_matrix2n, check_structure, mode_count, symplectic_form
from sympolar.errors import (
    AsymmetricAlpha,
    NonConvergence,
    PreconditionReason,
    PreconditionViolated,
    VerificationError,
)
from sympolar.linalg.schur import real_schur

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class WilliamsonForm:
    """``S^T alpha S = Lambda`` with ``Lambda = diag(nu, nu)`` and ``nu`` descending."""

    S: np.ndarray
    Lambda: np.ndarray

    @property
    def nu(self) -> np.ndarray:
        return np.diag(self.Lambda)[: mode_count(self.Lambda)].copy()


def require_symmetric(alpha: np.ndarray, tol: TolerancePolicy, *, name: str = "alpha") -> np.ndarray:
    scale = float(np.linalg.norm(alpha))
    residual = float(np.linalg.norm(alpha - alpha.T))
    if not tol.accepts(residual, scale):
        raise AsymmetricAlpha(f"{name} is not symmetric: ||{name} - {name}^T|| = {residual:.3e}")
    return 0.5 * (alpha + alpha.T)


def williamson(alpha: Any, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> WilliamsonForm:
    arr = require_symmetric(as_matrix2n(alpha, name="alpha"), tol)
    n = mode_count(arr)
    w, V = eigh(arr)
    if w[-1] <= 0 or w[0] <= tol.rel_tol * w[-1]:
        raise PreconditionViolated(
            PreconditionReason.NOT_POSITIVE_DEFINITE,
            f"alpha must be positive definite; eigenvalue range [{w[0]:.3e}, {w[-1]:.3e}]",
            eigenvalues=[float(w[0])],
        )
    root = (V * np.sqrt(w)) @ V.T
    inv_root = (V / np.sqrt(w)) @ V.T
    W = root @ symplectic_form(n) @ root
    W = 0.5 * (W - W.T)

    form = real_schur(W)
    positions: list[np.ndarray] = []
    momenta: list[np.ndarray] = []
    nus: list[float] = []
    for start, size in form.blocks:
        if size != 2:
            raise NonConvergence("Schur form of alpha^(1/2) J alpha^(1/2) has a real eigenvalue")
        b = 0.5 * (form.T[start, start + 1] - form.T[start + 1, start])
        z1, z2 = form.Q[:, start], form.Q[:, start + 1]
        # W q = nu p and W p = -nu q
        if b > 0:
            positions.append(z2)
            momenta.append(z1)
            nus.append(float(b))
        else:
            positions.append(z1)
            momenta.append(z2)
            nus.append(float(-b))

    order = np.argsort(-np.asarray(nus), kind="stable")
    nu = np.asarray(nus)[order]
    O = np.column_stack([positions[k] for k in order] + [momenta[k] for k in order])
    paired = np.concatenate([nu, nu])
    S = inv_root @ O * np.sqrt(paired)
    Lambda = np.diag(paired)

    symplectic = check_structure(S, StructureKind.SYMPLECTIC, tol)
    diagonal_residual = float(np.linalg.norm(S.T @ arr @ S - Lambda))
    diagonal_bound = tol.bound(float(np.linalg.norm(arr)) * float(np.linalg.norm(S)) ** 2)
    logger.debug(
        "williamson n=%d nu=%s symplectic=%.3e diagonal=%.3e",
        n,
        np.array2string(nu, precision=6),
        symplectic.residual,
        diagonal_residual,
    )
    if not symplectic.holds or diagonal_residual > diagonal_bound:
        raise VerificationError(
            f"Williamson form failed verification: symplectic {symplectic.residual:.3e}, "
            f"diagonalization {diagonal_residual:.3e}"
        )
    return WilliamsonForm(S=S, Lambda=Lambda)


__all__ = ["WilliamsonForm", "require_symmetric", "williamson"]
