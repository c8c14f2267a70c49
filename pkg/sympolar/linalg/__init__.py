"""
Dense matrix functions: real Schur classification, principal square roots,
and the structured roots of skew-Hamiltonian matrices.
"""

from .schur import classify_eigenvalues, classify_real_eigenvalues, real_schur
from .sqrtm import principal_sqrt_real
from .structured import (
    SymplecticBlockDiagonalization,
    hamiltonian_sqrt,
    skew_hamiltonian_principal_sqrt,
    symmetric_pair_factorization,
    symplectic_block_diagonalize,
)

__all__ = [
    "classify_eigenvalues",
    "classify_real_eigenvalues",
    "real_schur",
    "principal_sqrt_real",
    "SymplecticBlockDiagonalization",
    "hamiltonian_sqrt",
    "skew_hamiltonian_principal_sqrt",
    "symmetric_pair_factorization",
    "symplectic_block_diagonalize",
]
