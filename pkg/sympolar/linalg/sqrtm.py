"""Real principal square root by the real Schur block recurrence.

The quasi-triangular factor ``T`` of ``A = Q T Q^T`` is rooted block by
block: diagonal blocks in closed form, off-diagonal blocks by small
Sylvester solves working outwards from the diagonal. The result is a
polynomial in ``A`` and inherits any structure ``A`` has in that sense.
"""

import logging
from typing import Any

import numpy as np
from scipy.linalg import solve_sylvester

from sympolar.core.models import DEFAULT_TOLERANCE, TolerancePolicy
from sympolar.errors import NumericalBreakdown, PreconditionReason, PreconditionViolated

from .schur import as_square, classify_eigenvalues, real_schur

logger = logging.getLogger(__name__)


def _sqrt_diagonal_block(block: np.ndarray) -> np.ndarray:
    if block.shape == (1, 1):
        return np.sqrt(block)
    # 2x2: R = (B + sqrt(det B) I) / sqrt(tr B + 2 sqrt(det B)).
    det_root = float(np.sqrt(max(float(np.linalg.det(block)), 0.0)))
    scale_sq = float(np.trace(block)) + 2.0 * det_root
    # vanishes as the pair closes in on the negative real axis
    if not np.isfinite(scale_sq) or scale_sq <= np.finfo(float).eps * det_root:
        mean = 0.5 * float(np.trace(block))
        raise PreconditionViolated(
            PreconditionReason.NEGATIVE_OR_ZERO_REAL_EIGENVALUE,
            f"eigenvalue pair at {mean:.6g} is numerically on the negative real axis",
            eigenvalues=[mean, mean],
        )
    return (block + det_root * np.eye(2)) / np.sqrt(scale_sq)


def principal_sqrt_real(A: Any, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> np.ndarray:
    """Real principal square root; every eigenvalue of the result has positive real part."""
    arr = as_square(A)
    form = real_schur(arr)
    classification = classify_eigenvalues(form.eigenvalues(), tol)
    if classification.has_zero or classification.has_negative_real:
        offending = [v for v in classification.real_eigenvalues if v <= tol.realness_threshold(classification.spectral_radius)]
        raise PreconditionViolated(
            PreconditionReason.NEGATIVE_OR_ZERO_REAL_EIGENVALUE,
            f"principal square root needs no zero or negative real eigenvalues, found {offending}",
            eigenvalues=offending,
        )

    T = form.T
    blocks = form.blocks
    slices = [slice(start, start + size) for start, size in blocks]
    R = np.zeros_like(T)
    for j, sj in enumerate(slices):
        R[sj, sj] = _sqrt_diagonal_block(T[sj, sj])
        for i in range(j - 1, -1, -1):
            si = slices[i]
            rhs = T[si, sj].copy()
            for k in range(i + 1, j):
                sk = slices[k]
                rhs -= R[si, sk] @ R[sk, sj]
            R[si, sj] = solve_sylvester(R[si, si], R[sj, sj], rhs)

    M = form.Q @ R @ form.Q.T
    if not np.all(np.isfinite(M)):
        raise NumericalBreakdown("principal square root produced non-finite entries")
    if logger.isEnabledFor(logging.DEBUG):
        residual = float(np.linalg.norm(M @ M - arr))
        logger.debug("principal sqrt residual=%.3e (||A||=%.3e)", residual, float(np.linalg.norm(arr)))
    return M


__all__ = ["principal_sqrt_real"]
