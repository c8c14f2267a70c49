"""
Bosonic Gaussian channel triples ``(K, l, alpha)``.

Channels act on first and second moments; composition follows

    (K2, l2, alpha2) * (K1, l1, alpha1)
        = (K1 K2, K2^T l1 + l2, K2^T alpha1 K2 + alpha2)

with identity ``(I, 0, 0)``. Inhomogeneous symplectic transformations
``(S, h, 0)`` on both sides bring a nondegenerate channel to one of three
canonical forms ``(D R, 0, Lambda)``, ``(A, 0, Lambda)`` or ``(D A, 0, Lambda)``.
"""

import logging
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np
from scipy.linalg import eigvalsh

from sympolar.core.enums import ChannelCase, Variant
from sympolar.core.models import DEFAULT_TOLERANCE, EigenClassification, TolerancePolicy
from sympolar.core.symplectic import (
    as_matrix2n,
    associated_skew_hamiltonian_left,
    check_mode_count,
    determinant,
    is_degenerate,
    mode_count,
    signature_matrix,
    symplectic_form,
)
from sympolar.decompositions.polar import Factorization, decompose
from sympolar.errors import (
    DimensionMismatch,
    NonFiniteInput,
    PreconditionReason,
    PreconditionViolated,
)
from sympolar.linalg.schur import classify_real_eigenvalues

from .williamson import WilliamsonForm, require_symmetric, williamson

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GaussianChannelTriple:
    K: np.ndarray
    l: np.ndarray  # noqa: E741
    alpha: np.ndarray

    def __post_init__(self) -> None:
        K = as_matrix2n(self.K, name="K")
        alpha = as_matrix2n(self.alpha, name="alpha")
        l = np.asarray(self.l, dtype=float).reshape(-1)  # noqa: E741
        if alpha.shape != K.shape or l.shape != (K.shape[0],):
            raise DimensionMismatch(
                f"Channel parts disagree: K {K.shape}, l {l.shape}, alpha {alpha.shape}"
            )
        if not np.all(np.isfinite(l)):
            raise NonFiniteInput("l has NaN or infinite entries")
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "alpha", alpha)

    @property
    def n(self) -> int:
        return mode_count(self.K)


@dataclass(frozen=True)
class ChannelValidity:
    valid: bool
    min_eigenvalue: float
    bound: float


@dataclass(frozen=True)
class ChannelClassification:
    classification: EigenClassification
    admissible_cases: tuple[ChannelCase, ...]
    determinant: float
    holevo_case: Optional[str] = None

    @property
    def auto_case(self) -> Optional[ChannelCase]:
        for case in (ChannelCase.A_FORM, ChannelCase.DA_FORM, ChannelCase.DR_FORM):
            if case in self.admissible_cases:
                return case
        return None


@dataclass(frozen=True, eq=False)
class ChannelNormalForm:
    case: ChannelCase
    left: tuple[np.ndarray, np.ndarray]
    right: tuple[np.ndarray, np.ndarray]
    canonical: GaussianChannelTriple
    core_factor: np.ndarray
    williamson: Optional[WilliamsonForm]
    factorization: Factorization
    reconstruction_residual: float
    reconstruction_bound: float

    @property
    def ok(self) -> bool:
        return self.factorization.ok and self.reconstruction_residual <= self.reconstruction_bound

    def reconstruct(self, channel: GaussianChannelTriple) -> GaussianChannelTriple:
        """Apply both recorded transforms to ``channel``."""
        S2, h2 = self.left
        S1, h1 = self.right
        return compose(symplectic_channel(S2, h2), compose(channel, symplectic_channel(S1, h1)))


@dataclass(frozen=True)
class ParameterCounts:
    general: int
    symplectic: int
    canonical_core: int
    skew_symmetric: int
    symmetric: int

    def as_dict(self) -> dict[str, int]:
        return {
            "general": self.general,
            "symplectic": self.symplectic,
            "canonical_core": self.canonical_core,
            "skew_symmetric": self.skew_symmetric,
            "symmetric": self.symmetric,
        }


def identity_channel(n: int) -> GaussianChannelTriple:
    n = check_mode_count(n)
    return GaussianChannelTriple(K=np.eye(2 * n), l=np.zeros(2 * n), alpha=np.zeros((2 * n, 2 * n)))


def symplectic_channel(S: Any, h: Any = None) -> GaussianChannelTriple:
    K = as_matrix2n(S, name="S")
    shift = np.zeros(K.shape[0]) if h is None else h
    return GaussianChannelTriple(K=K, l=shift, alpha=np.zeros_like(K))


def validate_channel(c: GaussianChannelTriple, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> ChannelValidity:
    alpha = require_symmetric(c.alpha, tol)
    J = symplectic_form(c.n)
    hermitian = alpha - 0.5j * (J - c.K.T @ J @ c.K)
    min_eigenvalue = float(eigvalsh(hermitian)[0])
    bound = -tol.rel_tol * (1.0 + float(np.linalg.norm(alpha)) + float(np.linalg.norm(c.K)) ** 2)
    return ChannelValidity(valid=min_eigenvalue >= bound, min_eigenvalue=min_eigenvalue, bound=bound)


def compose(c2: GaussianChannelTriple, c1: GaussianChannelTriple) -> GaussianChannelTriple:
    if c1.n != c2.n:
        raise DimensionMismatch(f"Cannot compose channels on {c2.n} and {c1.n} modes")
    return GaussianChannelTriple(
        K=c1.K @ c2.K,
        l=c2.K.T @ c1.l + c2.l,
        alpha=c2.K.T @ c1.alpha @ c2.K + c2.alpha,
    )


def classify_channel(K: Any, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> ChannelClassification:
    """Spectrum flags of ``-K^T J K J`` and the canonical forms they allow."""
    arr = as_matrix2n(K, name="K")
    classification = classify_real_eigenvalues(associated_skew_hamiltonian_left(arr), tol)
    det = determinant(arr)
    cases: list[ChannelCase] = []
    if not is_degenerate(arr, tol):
        cases.append(ChannelCase.DR_FORM)
        if not classification.has_zero:
            if not classification.has_negative_real:
                cases.append(ChannelCase.A_FORM)
            if not classification.has_positive_real:
                cases.append(ChannelCase.DA_FORM)
    holevo: Optional[str] = None
    if mode_count(arr) == 1 and ChannelCase.DR_FORM in cases:
        holevo = "B)-C)" if det > 0 else "D)"
    return ChannelClassification(
        classification=classification,
        admissible_cases=tuple(cases),
        determinant=det,
        holevo_case=holevo,
    )


_CASE_VARIANTS = {
    ChannelCase.DR_FORM: Variant.SDR,
    ChannelCase.A_FORM: Variant.SA,
    ChannelCase.DA_FORM: Variant.SDA,
}


def _inadmissible(case: ChannelCase, info: ChannelClassification, tol: TolerancePolicy) -> PreconditionViolated:
    classification = info.classification
    threshold = tol.realness_threshold(classification.spectral_radius)
    if case is ChannelCase.AUTO:
        offending = [v for v in classification.real_eigenvalues if abs(v) <= threshold]
        wanted = "a spectrum admitting one of AForm, DAForm or DRForm"
    elif case is ChannelCase.A_FORM:
        offending = [v for v in classification.real_eigenvalues if v <= threshold]
        wanted = "no zero or negative real eigenvalues"
    else:
        offending = [v for v in classification.real_eigenvalues if v >= -threshold]
        wanted = "no zero or positive real eigenvalues"
    return PreconditionViolated(
        PreconditionReason.CASE_INADMISSIBLE,
        f"{case.value} needs -K^T J K J with {wanted}; offending real eigenvalues {offending}",
        eigenvalues=offending,
    )


def _diagonalize_noise(
    alpha: np.ndarray, tol: TolerancePolicy, *, negligible: float
) -> tuple[np.ndarray, np.ndarray, Optional[WilliamsonForm]]:
    size = alpha.shape[0]
    scale = float(np.linalg.norm(alpha))
    if scale <= negligible:
        return np.eye(size), np.zeros_like(alpha), None
    try:
        form = williamson(alpha, tol)
    except PreconditionViolated as exc:
        if exc.reason is not PreconditionReason.NOT_POSITIVE_DEFINITE:
            raise
        off_diagonal = float(np.linalg.norm(alpha - np.diag(np.diag(alpha))))
        if not tol.accepts(off_diagonal, scale):
            raise
        logger.debug("alpha is singular and diagonal; skipping the Williamson step")
        return np.eye(size), np.diag(np.diag(alpha)), None
    return form.S, form.Lambda, form


def normal_form(
    c: GaussianChannelTriple,
    case: ChannelCase | str = ChannelCase.AUTO,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> ChannelNormalForm:
    case = ChannelCase(case)
    if is_degenerate(c.K, tol):
        raise PreconditionViolated(PreconditionReason.DEGENERATE, "K is numerically singular")

    alpha = require_symmetric(c.alpha, tol)
    # below rounding of K^T alpha K terms, alpha counts as zero
    negligible = float(np.finfo(float).eps) * (1.0 + float(np.linalg.norm(c.K)) ** 2)
    S2, Lambda, form = _diagonalize_noise(alpha, tol, negligible=negligible)

    # Y'(K S2) = S2^T Y'(K) S2^-T; the case is chosen on the matrix decompose sees
    X = c.K @ S2
    info = classify_channel(X, tol)
    chosen = info.auto_case if case is ChannelCase.AUTO else case
    if chosen is None or chosen not in info.admissible_cases:
        raise _inadmissible(chosen or case, info, tol)

    factorization = decompose(X, _CASE_VARIANTS[chosen], tol)
    S, core = factorization.factors
    S1 = np.linalg.inv(S)
    n = c.n
    canonical_K = core if chosen is ChannelCase.A_FORM else signature_matrix(n) @ core
    h1 = np.zeros(2 * n)
    h2 = -S2.T @ c.l
    canonical = GaussianChannelTriple(K=canonical_K, l=np.zeros(2 * n), alpha=Lambda)

    result = ChannelNormalForm(
        case=chosen,
        left=(S2, h2),
        right=(S1, h1),
        canonical=canonical,
        core_factor=core,
        williamson=form,
        factorization=factorization,
        reconstruction_residual=0.0,
        reconstruction_bound=0.0,
    )
    rebuilt = result.reconstruct(c)
    difference = (
        float(np.linalg.norm(rebuilt.K - canonical.K))
        + float(np.linalg.norm(rebuilt.l - canonical.l))
        + float(np.linalg.norm(rebuilt.alpha - canonical.alpha))
    )
    scale = 1.0 + float(np.linalg.norm(canonical.K)) + float(np.linalg.norm(canonical.alpha))
    magnitude = float(np.linalg.norm(S2)) * (
        float(np.linalg.norm(S1)) * float(np.linalg.norm(c.K))
        + float(np.linalg.norm(S2)) * float(np.linalg.norm(alpha))
        + float(np.linalg.norm(c.l))
    )
    object.__setattr__(result, "reconstruction_residual", difference / scale)
    object.__setattr__(result, "reconstruction_bound", tol.bound(magnitude) / scale)
    logger.debug("normal_form %s: reconstruction=%.3e", chosen.value, result.reconstruction_residual)
    return result


def parameter_counts(n: int) -> ParameterCounts:
    n = check_mode_count(n)
    return ParameterCounts(
        general=4 * n * n,
        symplectic=n * (2 * n + 1),
        canonical_core=n * (2 * n - 1),
        skew_symmetric=n * (2 * n - 1),
        symmetric=n * (2 * n + 1),
    )


__all__ = [
    "GaussianChannelTriple",
    "ChannelValidity",
    "ChannelClassification",
    "ChannelNormalForm",
    "ParameterCounts",
    "identity_channel",
    "symplectic_channel",
    "validate_channel",
    "compose",
    "classify_channel",
    "normal_form",
    "parameter_counts",
]
