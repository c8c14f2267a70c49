"""
Symplectic polar decompositions and Gaussian channel canonical forms.

:mod:`sympolar.core` holds the symplectic form, structure predicates and the
tolerance policy; :mod:`sympolar.linalg` the structured square roots;
:mod:`sympolar.decompositions` the twelve polar variants;
:mod:`sympolar.channels` channel triples, Williamson diagonalization and
canonical forms. Everything re-exports here.
"""

from sympolar import analytics, channels, core, data, decompositions, linalg
from sympolar.channels import (
    ChannelNormalForm,
    GaussianChannelTriple,
    WilliamsonForm,
    classify_channel,
    compose,
    identity_channel,
    normal_form,
    parameter_counts,
    symplectic_channel,
    validate_channel,
    williamson,
)
from sympolar.configuration import RunSettings, load_settings_from_dict, load_settings_from_json
from sympolar.core import (
    DEFAULT_TOLERANCE,
    ChannelCase,
    EigenClassification,
    GeneratorKind,
    StructureCheck,
    StructureKind,
    TolerancePolicy,
    Variant,
    associated_skew_hamiltonian,
    check_structure,
    signature_matrix,
    symplectic_form,
)
from sympolar.core.logging import configure_logging, log_report
from sympolar.decompositions import VARIANT_LAYOUTS, Factorization, decompose, verify
from sympolar.errors import (
    AsymmetricAlpha,
    DefectiveEigenstructure,
    DerogatoryInput,
    DimensionMismatch,
    DocumentError,
    InvalidDimension,
    NonConvergence,
    NonFiniteInput,
    NumericalBreakdown,
    PreconditionReason,
    PreconditionViolated,
    SympolarError,
    VerificationError,
)
from sympolar.linalg import (
    classify_real_eigenvalues,
    hamiltonian_sqrt,
    principal_sqrt_real,
    skew_hamiltonian_principal_sqrt,
    symplectic_block_diagonalize,
)

__all__ = [
    "ChannelNormalForm",
    "GaussianChannelTriple",
    "WilliamsonForm",
    "classify_channel",
    "compose",
    "identity_channel",
    "normal_form",
    "parameter_counts",
    "symplectic_channel",
    "validate_channel",
    "williamson",
    "RunSettings",
    "load_settings_from_dict",
    "load_settings_from_json",
    "DEFAULT_TOLERANCE",
    "ChannelCase",
    "EigenClassification",
    "GeneratorKind",
    "StructureCheck",
    "StructureKind",
    "TolerancePolicy",
    "Variant",
    "associated_skew_hamiltonian",
    "check_structure",
    "signature_matrix",
    "symplectic_form",
    "configure_logging",
    "log_report",
    "VARIANT_LAYOUTS",
    "Factorization",
    "decompose",
    "verify",
    "AsymmetricAlpha",
    "DefectiveEigenstructure",
    "DerogatoryInput",
    "DimensionMismatch",
    "DocumentError",
    "InvalidDimension",
    "NonConvergence",
    "NonFiniteInput",
    "NumericalBreakdown",
    "PreconditionReason",
    "PreconditionViolated",
    "SympolarError",
    "VerificationError",
    "classify_real_eigenvalues",
    "hamiltonian_sqrt",
    "principal_sqrt_real",
    "skew_hamiltonian_principal_sqrt",
    "symplectic_block_diagonalize",
    "analytics",
    "channels",
    "core",
    "data",
    "decompositions",
    "linalg",
]
