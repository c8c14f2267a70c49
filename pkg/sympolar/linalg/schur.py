"""Real Schur decomposition and real-eigenvalue classification."""

import logging
from typing import Any

import numpy as np
from scipy.linalg import LinAlgError, schur

from sympolar.core.models import DEFAULT_TOLERANCE, EigenClassification, RealSchurForm, TolerancePolicy
from sympolar.errors import InvalidDimension, NonConvergence, NonFiniteInput

logger = logging.getLogger(__name__)


def as_square(A: Any, *, name: str = "A") -> np.ndarray:
    arr = np.asarray(A, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise InvalidDimension(f"{name} must be a non-empty square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"{name} has NaN or infinite entries")
    return arr


def real_schur(A: Any) -> RealSchurForm:
    arr = as_square(A)
    try:
        T, Q = schur(arr, output="real")
    except (LinAlgError, ValueError) as exc:
        # LAPACK's implicit double-shift QR exhausted its sweep budget.
        raise NonConvergence(f"Real Schur reduction failed: {exc}") from exc
    return RealSchurForm(Q=Q, T=T)


def classify_eigenvalues(eigenvalues: np.ndarray, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> EigenClassification:
    values = np.asarray(eigenvalues, dtype=complex)
    radius = float(np.max(np.abs(values))) if values.size else 0.0
    threshold = tol.realness_threshold(radius)
    real: list[float] = []
    has_zero = has_negative = has_positive = False
    for value in values:
        if abs(value.imag) > threshold:
            continue
        real.append(float(value.real))
        if abs(value.real) <= threshold:
            has_zero = True
        elif value.real < 0:
            has_negative = True
        else:
            has_positive = True
    return EigenClassification(
        has_zero=has_zero,
        has_negative_real=has_negative,
        has_positive_real=has_positive,
        real_eigenvalues=tuple(sorted(real)),
        spectral_radius=radius,
        eigenvalues=tuple(complex(v) for v in values),
    )


def classify_real_eigenvalues(A: Any, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> EigenClassification:
    form = real_schur(A)
    classification = classify_eigenvalues(form.eigenvalues(), tol)
    logger.debug(
        "Spectrum classified: zero=%s negative=%s positive=%s rho=%.3e",
        classification.has_zero,
        classification.has_negative_real,
        classification.has_positive_real,
        classification.spectral_radius,
    )
    return classification


__all__ = ["as_square", "real_schur", "classify_eigenvalues", "classify_real_eigenvalues"]
