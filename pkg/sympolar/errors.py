"""Unified exception hierarchy for sympolar."""

from enum import Enum
from typing import Sequence


class PreconditionReason(str, Enum):
    DEGENERATE = "Degenerate"
    SPECTRUM_SIGN = "SpectrumSign"
    NEGATIVE_OR_ZERO_REAL_EIGENVALUE = "NegativeOrZeroRealEigenvalue"
    NOT_SKEW_HAMILTONIAN = "NotSkewHamiltonian"
    NOT_POSITIVE_DEFINITE = "NotPositiveDefinite"
    CASE_INADMISSIBLE = "CaseInadmissible"


class SympolarError(Exception):
    """Base class for library errors."""


class InvalidDimension(SympolarError):
    """Mode count or matrix shape is not a positive even dimension."""


class NonFiniteInput(SympolarError):
    """Input carries NaN or infinite entries."""


class DimensionMismatch(SympolarError):
    """Operands disagree on the mode count."""


class PreconditionViolated(SympolarError):
    """A mathematical precondition of the requested operation fails.

    ``eigenvalues`` carries the offending real eigenvalues for spectrum
    failures so callers can report them.
    """

    def __init__(
        self,
        reason: PreconditionReason,
        message: str,
        *,
        eigenvalues: Sequence[float] = (),
    ) -> None:
        super().__init__(f"{reason.value}: {message}")
        self.reason = reason
        self.eigenvalues = tuple(float(v) for v in eigenvalues)


class NonConvergence(SympolarError):
    """Iterative eigenvalue reduction did not settle."""


class NumericalBreakdown(SympolarError):
    """A dense kernel met a singular system or non-finite intermediate values."""


class DefectiveEigenstructure(SympolarError):
    """Eigenstructure is outside the generic case the algorithm handles."""


class DerogatoryInput(SympolarError):
    """No Krylov seed produced a full-rank basis."""


class AsymmetricAlpha(SympolarError):
    """Channel noise matrix is not symmetric."""


class VerificationError(SympolarError):
    """Recomputed residuals exceed the tolerance policy."""


class DocumentError(SympolarError):
    """Matrix or channel document failed to load or parse."""


__all__ = [
    "PreconditionReason",
    "SympolarError",
    "InvalidDimension",
    "NonFiniteInput",
    "DimensionMismatch",
    "PreconditionViolated",
    "NonConvergence",
    "NumericalBreakdown",
    "DefectiveEigenstructure",
    "DerogatoryInput",
    "AsymmetricAlpha",
    "VerificationError",
    "DocumentError",
]
