"""
Core primitives shared by every sympolar module.

Exports the structural enums, the tolerance policy and verdict models, and
the symplectic form with its structure predicates.
"""

from .enums import ChannelCase, GeneratorKind, StructureKind, Variant
from .models import DEFAULT_TOLERANCE, EigenClassification, RealSchurForm, StructureCheck, TolerancePolicy
from .symplectic import (
    as_matrix2n,
    associated_skew_hamiltonian,
    associated_skew_hamiltonian_left,
    check_mode_count,
    check_structure,
    determinant,
    is_degenerate,
    mode_count,
    signature_matrix,
    skew_hamiltonian_part,
    structure_residual,
    swap_matrix,
    symplectic_form,
    symplectic_inverse,
)

__all__ = [
    "ChannelCase",
    "GeneratorKind",
    "StructureKind",
    "Variant",
    "DEFAULT_TOLERANCE",
    "EigenClassification",
    "RealSchurForm",
    "StructureCheck",
    "TolerancePolicy",
    "as_matrix2n",
    "associated_skew_hamiltonian",
    "associated_skew_hamiltonian_left",
    "check_mode_count",
    "check_structure",
    "determinant",
    "is_degenerate",
    "mode_count",
    "signature_matrix",
    "skew_hamiltonian_part",
    "structure_residual",
    "swap_matrix",
    "symplectic_form",
    "symplectic_inverse",
]
