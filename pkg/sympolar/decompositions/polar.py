"""Symplectic analogs of the real polar decomposition.

Twelve variants, named by the left-to-right order of their factors:

========  ==========================================  =======================
variant   factors                                     precondition
========  ==========================================  =======================
HT / TH   Hamiltonian, anti-symplectic                det X != 0, generic Y
RDS/SDR   symmetric, D, symplectic                    det X != 0, generic Y
MS / AS   skew-Hamiltonian or skew-symmetric, symp.   Y: no zero/neg. real
MDS/ADS   as above with D                             Y: no zero/pos. real
SM ... SDA  transposed forms of the four above        same on Y'
========  ==========================================  =======================

with ``Y = -X J X^T J`` and ``Y' = -X^T J X J``. ``D`` is never stored in a
:class:`Factorization`; the variant layout says where it goes.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Any, Callable, Optional, Sequence

import numpy as np

from sympolar.core.enums import StructureKind, Variant
from sympolar.core.models import DEFAULT_TOLERANCE, EigenClassification, StructureCheck, TolerancePolicy
from sympolar.core.symplectic import (
    as_matrix2n,
    associated_skew_hamiltonian,
    associated_skew_hamiltonian_left,
    check_structure,
    is_degenerate,
    mode_count,
    signature_matrix,
    swap_matrix,
    symplectic_form,
)
from sympolar.errors import (
    DimensionMismatch,
    NumericalBreakdown,
    PreconditionReason,
    PreconditionViolated,
    VerificationError,
)
from sympolar.linalg.schur import classify_real_eigenvalues
from sympolar.linalg.structured import hamiltonian_sqrt, skew_hamiltonian_principal_sqrt

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Slot:
    name: str
    kind: Optional[StructureKind]

    @property
    def is_signature(self) -> bool:
        return self.kind is None


_H = Slot("H", StructureKind.HAMILTONIAN)
_T = Slot("T", StructureKind.ANTI_SYMPLECTIC)
_R = Slot("R", StructureKind.SYMMETRIC)
_M = Slot("M", StructureKind.SKEW_HAMILTONIAN)
_A = Slot("A", StructureKind.SKEW_SYMMETRIC)
_S = Slot("S", StructureKind.SYMPLECTIC)
_D = Slot("D", None)

VARIANT_LAYOUTS: dict[Variant, tuple[Slot, ...]] = {
    Variant.HT: (_H, _T),
    Variant.TH: (_T, _H),
    Variant.RDS: (_R, _D, _S),
    Variant.SDR: (_S, _D, _R),
    Variant.MS: (_M, _S),
    Variant.AS: (_A, _S),
    Variant.MDS: (_M, _D, _S),
    Variant.ADS: (_A, _D, _S),
    Variant.SM: (_S, _M),
    Variant.SA: (_S, _A),
    Variant.SDM: (_S, _D, _M),
    Variant.SDA: (_S, _D, _A),
}


def stored_slots(variant: Variant) -> tuple[Slot, ...]:
    return tuple(slot for slot in VARIANT_LAYOUTS[variant] if not slot.is_signature)


@dataclass(frozen=True)
class ReconstructionCheck:
    """``residual = ||prod - X||_F / (1 + ||X||_F)`` against the bound in the same units."""

    residual: float
    bound: float

    @property
    def holds(self) -> bool:
        return self.residual <= self.bound


@dataclass(frozen=True, eq=False)
class Factorization:
    variant: Variant
    factors: tuple[np.ndarray, ...]
    structure_report: tuple[StructureCheck, ...]
    reconstruction: ReconstructionCheck
    classification: Optional[EigenClassification] = None

    @property
    def layout(self) -> tuple[Slot, ...]:
        return VARIANT_LAYOUTS[self.variant]

    @property
    def reconstruction_residual(self) -> float:
        return self.reconstruction.residual

    @property
    def ok(self) -> bool:
        return self.reconstruction.holds and all(check.holds for check in self.structure_report)

    def factor(self, name: str) -> np.ndarray:
        for slot, matrix in zip(stored_slots(self.variant), self.factors):
            if slot.name == name:
                return matrix
        raise KeyError(f"Variant {self.variant.value} has no factor {name!r}")

    def product(self) -> np.ndarray:
        return _product(self.variant, self.factors)


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    structure_report: tuple[StructureCheck, ...]
    reconstruction: ReconstructionCheck


def _product(variant: Variant, factors: Sequence[np.ndarray]) -> np.ndarray:
    n = mode_count(factors[0])
    stored = iter(factors)
    chain = [signature_matrix(n) if slot.is_signature else next(stored) for slot in VARIANT_LAYOUTS[variant]]
    return reduce(np.matmul, chain)


def _evaluate(
    X: np.ndarray, variant: Variant, factors: Sequence[np.ndarray], tol: TolerancePolicy
) -> tuple[tuple[StructureCheck, ...], ReconstructionCheck]:
    slots = stored_slots(variant)
    checks = tuple(
        check_structure(matrix, slot.kind, tol)  # type: ignore[arg-type]
        for slot, matrix in zip(slots, factors)
    )
    x_norm = float(np.linalg.norm(X))
    absolute = float(np.linalg.norm(_product(variant, factors) - X))
    factor_scale = float(np.prod([np.linalg.norm(matrix) for matrix in factors]))
    reconstruction = ReconstructionCheck(
        residual=absolute / (1.0 + x_norm),
        bound=tol.bound(factor_scale) / (1.0 + x_norm),
    )
    return checks, reconstruction


def _guard_spectrum(
    classification: EigenClassification, label: str, tol: TolerancePolicy, *, forbid_negative: bool
) -> None:
    threshold = tol.realness_threshold(classification.spectral_radius)
    if forbid_negative:
        failed = classification.has_zero or classification.has_negative_real
        offending = [v for v in classification.real_eigenvalues if v <= threshold]
        wanted = "no zero or negative real eigenvalues"
    else:
        failed = classification.has_zero or classification.has_positive_real
        offending = [v for v in classification.real_eigenvalues if v >= -threshold]
        wanted = "no zero or positive real eigenvalues"
    if failed:
        raise PreconditionViolated(
            PreconditionReason.SPECTRUM_SIGN,
            f"{label} must have {wanted}; offending real eigenvalues {offending}",
            eigenvalues=offending,
        )


# Builders receive X and its associated matrix; the spectrum has been checked already.
_Builder = Callable[[np.ndarray, np.ndarray, TolerancePolicy], tuple[np.ndarray, ...]]


def _ms(X: np.ndarray, Y: np.ndarray, tol: TolerancePolicy) -> tuple[np.ndarray, ...]:
    M = skew_hamiltonian_principal_sqrt(Y, tol)
    return M, np.linalg.solve(M, X)


def _as(X: np.ndarray, Y: np.ndarray, tol: TolerancePolicy) -> tuple[np.ndarray, ...]:
    J = symplectic_form(mode_count(X))
    M, S = _ms(X, Y, tol)
    # X = M S = (-M J)(J S)
    return -M @ J, J @ S


def _reflected(base: _Builder) -> _Builder:
    """``X D = F S1`` gives ``X = F D (D S1 D)``; ``X D`` has associated matrix ``-Y``."""

    def build(X: np.ndarray, Y: np.ndarray, tol: TolerancePolicy) -> tuple[np.ndarray, ...]:
        D = signature_matrix(mode_count(X))
        left, S1 = base(X @ D, -Y, tol)
        return left, D @ S1 @ D

    return build


def _ht(X: np.ndarray, Y: np.ndarray, tol: TolerancePolicy) -> tuple[np.ndarray, ...]:
    if is_degenerate(X, tol):
        raise PreconditionViolated(PreconditionReason.DEGENERATE, "X is numerically singular")
    H = hamiltonian_sqrt(Y, tol)
    return H, np.linalg.solve(H, X)


def _rds(X: np.ndarray, Y: np.ndarray, tol: TolerancePolicy) -> tuple[np.ndarray, ...]:
    n = mode_count(X)
    H, T = _ht(X, Y, tol)
    # H = R J, S = Z T, and R D S = R J Z^2 T = H T.
    return -H @ symplectic_form(n), swap_matrix(n) @ T


def _transposed(base: _Builder) -> _Builder:
    """Decompose ``X^T``, whose associated matrix is ``Y'``, and transpose back."""

    def build(X: np.ndarray, Y: np.ndarray, tol: TolerancePolicy) -> tuple[np.ndarray, ...]:
        factors = base(X.T, Y, tol)
        return tuple(matrix.T for matrix in reversed(factors))

    return build


@dataclass(frozen=True)
class _Recipe:
    build: _Builder
    left: bool
    # None: no sign rule; True: Y must avoid the closed negative axis; False: the positive one
    forbid_negative: Optional[bool]

    @property
    def label(self) -> str:
        return "Y' = -X^T J X J" if self.left else "Y = -X J X^T J"


_BUILDERS: dict[Variant, _Recipe] = {
    Variant.HT: _Recipe(_ht, False, None),
    Variant.RDS: _Recipe(_rds, False, None),
    Variant.TH: _Recipe(_transposed(_ht), True, None),
    Variant.SDR: _Recipe(_transposed(_rds), True, None),
    Variant.MS: _Recipe(_ms, False, True),
    Variant.AS: _Recipe(_as, False, True),
    Variant.MDS: _Recipe(_reflected(_ms), False, False),
    Variant.ADS: _Recipe(_reflected(_as), False, False),
    Variant.SM: _Recipe(_transposed(_ms), True, True),
    Variant.SA: _Recipe(_transposed(_as), True, True),
    Variant.SDM: _Recipe(_transposed(_reflected(_ms)), True, False),
    Variant.SDA: _Recipe(_transposed(_reflected(_as)), True, False),
}


def _build(
    arr: np.ndarray, variant: Variant, tol: TolerancePolicy
) -> tuple[tuple[np.ndarray, ...], EigenClassification]:
    recipe = _BUILDERS[variant]
    Y = associated_skew_hamiltonian_left(arr) if recipe.left else associated_skew_hamiltonian(arr)
    classification = classify_real_eigenvalues(Y, tol)
    if recipe.forbid_negative is not None:
        _guard_spectrum(classification, recipe.label, tol, forbid_negative=recipe.forbid_negative)
    try:
        factors = recipe.build(arr, Y, tol)
    except PreconditionViolated as exc:
        if exc.reason is not PreconditionReason.NEGATIVE_OR_ZERO_REAL_EIGENVALUE:
            raise
        # the square root saw +-Y; report in terms of Y
        sign = -1.0 if recipe.forbid_negative is False else 1.0
        raise PreconditionViolated(
            PreconditionReason.SPECTRUM_SIGN,
            f"{recipe.label} has eigenvalues too close to the excluded half-axis: {exc}",
            eigenvalues=[sign * v for v in exc.eigenvalues],
        ) from exc
    except ValueError as exc:
        raise NumericalBreakdown(f"{variant.value}: {exc}") from exc
    return factors, classification


def decompose(X: Any, variant: Variant | str, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> Factorization:
    arr = as_matrix2n(X)
    variant = Variant(variant.upper() if isinstance(variant, str) else variant)
    factors, classification = _build(arr, variant, tol)
    checks, reconstruction = _evaluate(arr, variant, factors, tol)
    result = Factorization(
        variant=variant,
        factors=tuple(factors),
        structure_report=checks,
        reconstruction=reconstruction,
        classification=classification,
    )
    logger.debug(
        "decompose %s: reconstruction=%.3e structure=%s",
        variant.value,
        reconstruction.residual,
        [f"{c.kind.value}:{c.residual:.2e}" for c in checks],
    )
    if not result.ok:
        raise VerificationError(
            f"{variant.value} factors failed their post-conditions: reconstruction "
            f"{reconstruction.residual:.3e}/{reconstruction.bound:.3e}, "
            + ", ".join(f"{c.kind.value} {c.residual:.3e}/{c.bound:.3e}" for c in checks)
        )
    return result


def verify(
    X: Any,
    factorization: Factorization,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> VerificationReport:
    """Recompute every residual of ``factorization`` against ``X`` from scratch."""
    arr = as_matrix2n(X)
    factors = [as_matrix2n(matrix, name="factor") for matrix in factorization.factors]
    expected = len(stored_slots(factorization.variant))
    if len(factors) != expected:
        raise DimensionMismatch(
            f"{factorization.variant.value} needs {expected} factors, got {len(factors)}"
        )
    for matrix in factors:
        if matrix.shape != arr.shape:
            raise DimensionMismatch(f"factor shape {matrix.shape} does not match X shape {arr.shape}")
    checks, reconstruction = _evaluate(arr, factorization.variant, factors, tol)
    ok = reconstruction.holds and all(check.holds for check in checks)
    return VerificationReport(ok=ok, structure_report=checks, reconstruction=reconstruction)


def factorization_from_factors(variant: Variant | str, factors: Sequence[Any]) -> Factorization:
    """Wrap externally supplied factors so :func:`verify` can judge them."""
    variant = Variant(variant.upper() if isinstance(variant, str) else variant)
    matrices = tuple(as_matrix2n(matrix, name="factor") for matrix in factors)
    nan = float("nan")
    return Factorization(
        variant=variant,
        factors=matrices,
        structure_report=(),
        reconstruction=ReconstructionCheck(residual=nan, bound=nan),
    )


__all__ = [
    "Slot",
    "VARIANT_LAYOUTS",
    "stored_slots",
    "ReconstructionCheck",
    "Factorization",
    "VerificationReport",
    "decompose",
    "verify",
    "factorization_from_factors",
]
