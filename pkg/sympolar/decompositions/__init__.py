"""
Symplectic polar decompositions of real 2n x 2n matrices.
"""

from .polar import (
    VARIANT_LAYOUTS,
    Factorization,
    ReconstructionCheck,
    Slot,
    VerificationReport,
    decompose,
    factorization_from_factors,
    stored_slots,
    verify,
)

__all__ = [
    "VARIANT_LAYOUTS",
    "Factorization",
    "ReconstructionCheck",
    "Slot",
    "VerificationReport",
    "decompose",
    "factorization_from_factors",
    "stored_slots",
    "verify",
]
