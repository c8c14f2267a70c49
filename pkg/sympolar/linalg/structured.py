"""Structure-preserving square roots of skew-Hamiltonian matrices.

Two roots are offered for a skew-Hamiltonian ``Y``:

* the principal primary root, itself skew-Hamiltonian;
* a Hamiltonian root, built from a symplectic block diagonalization
  ``S^{-1} Y S = diag(N, N^T)`` and a factorization ``N = P Q`` into
  symmetric matrices, so that ``H = S [[0, P], [Q, 0]] S^{-1}``.

The Hamiltonian route handles negative real eigenvalues but only the
eigen-generic case: every eigenvalue of ``Y`` has algebraic and geometric
multiplicity exactly two.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Iterator, Literal

import numpy as np
from scipy.linalg import block_diag, eigvals, svd

from sympolar.core.enums import StructureKind
from sympolar.core.models import DEFAULT_TOLERANCE, TolerancePolicy
from sympolar.core.symplectic import (
    as_matrix2n,
    check_structure,
    is_degenerate,
    mode_count,
    signature_matrix,
    skew_hamiltonian_part,
    symplectic_form,
    symplectic_inverse,
)
from sympolar.errors import (
    DefectiveEigenstructure,
    DerogatoryInput,
    PreconditionReason,
    PreconditionViolated,
)

from .schur import as_square
from .sqrtm import principal_sqrt_real

logger = logging.getLogger(__name__)

_KRYLOV_RNG_SEED = 20190311
_KRYLOV_RANDOM_ATTEMPTS = 8


@dataclass(frozen=True, eq=False)
class SymplecticBlockDiagonalization:
    """``S^{-1} Y S = diag(N, N^T)`` with ``S`` symplectic.

    ``blocks`` lists the sizes of the diagonal blocks of ``N``: 1 for a real
    eigenvalue, 2 for a realified complex-conjugate pair.
    """

    S: np.ndarray
    N: np.ndarray
    blocks: tuple[int, ...]

    def reconstruct(self) -> np.ndarray:
        return self.S @ block_diag(self.N, self.N.T) @ symplectic_inverse(self.S)


def _require_skew_hamiltonian(Y: np.ndarray, tol: TolerancePolicy) -> None:
    check = check_structure(Y, StructureKind.SKEW_HAMILTONIAN, tol)
    if not check.holds:
        raise PreconditionViolated(
            PreconditionReason.NOT_SKEW_HAMILTONIAN,
            f"skew-Hamiltonian residual {check.residual:.3e} exceeds {check.bound:.3e}",
        )


def skew_hamiltonian_principal_sqrt(
    Y: Any, tol: TolerancePolicy = DEFAULT_TOLERANCE, *, project: bool = False
) -> np.ndarray:
    """Principal square root of a skew-Hamiltonian matrix.

    With ``project=True`` the root is replaced by its skew-Hamiltonian part
    when that lowers the structure residual and keeps ``||M^2 - Y||`` within
    twice its original value.
    """
    arr = as_matrix2n(Y, name="Y")
    _require_skew_hamiltonian(arr, tol)
    M = principal_sqrt_real(arr, tol)
    if not project:
        return M

    projected = skew_hamiltonian_part(M)
    before = check_structure(M, StructureKind.SKEW_HAMILTONIAN, tol).residual
    after = check_structure(projected, StructureKind.SKEW_HAMILTONIAN, tol).residual
    root_before = float(np.linalg.norm(M @ M - arr))
    root_after = float(np.linalg.norm(projected @ projected - arr))
    if after < before and root_after <= 2.0 * root_before:
        logger.debug("Structure projection applied: %.3e -> %.3e", before, after)
        return projected
    logger.warning(
        "Structure projection rejected (structure %.3e -> %.3e, root %.3e -> %.3e)",
        before,
        after,
        root_before,
        root_after,
    )
    return M


def _pair_eigenvalues(values: np.ndarray, cluster_tol: float) -> list[complex]:
    remaining = [complex(v) for v in values]
    centres: list[complex] = []
    while remaining:
        first = remaining.pop(0)
        if not remaining:
            raise DefectiveEigenstructure(f"eigenvalue {first:.6g} has odd algebraic multiplicity")
        distances = [abs(first - other) for other in remaining]
        k = int(np.argmin(distances))
        if distances[k] > cluster_tol:
            raise DefectiveEigenstructure(
                f"eigenvalue {first:.6g} is not paired within {cluster_tol:.3e}; "
                "only eigenvalues of multiplicity exactly 2 are supported"
            )
        partner = remaining.pop(k)
        centres.append(0.5 * (first + partner))
    return centres


def _eigenspace(Y: np.ndarray, value: complex, null_tol: float) -> tuple[np.ndarray, np.ndarray]:
    """Two vectors spanning the eigenspace of ``value``; checks it is exactly 2-dimensional."""
    shifted = Y - value * np.eye(Y.shape[0])
    _, singular, vh = svd(shifted)
    if singular[-2] > null_tol:
        raise DefectiveEigenstructure(
            f"eigenvalue {value:.6g} has a 1-dimensional eigenspace (Jordan block); "
            "defective skew-Hamiltonian matrices are not supported"
        )
    if singular.size > 2 and singular[-3] <= null_tol:
        raise DefectiveEigenstructure(
            f"eigenvalue {value:.6g} has an eigenspace of dimension above 2; input is not eigen-generic"
        )
    return vh[-1].conj(), vh[-2].conj()


def _omega(J: np.ndarray, x: np.ndarray, y: np.ndarray) -> float:
    return float(x @ J @ y)


def symplectic_block_diagonalize(
    Y: Any, tol: TolerancePolicy = DEFAULT_TOLERANCE
) -> SymplecticBlockDiagonalization:
    arr = as_matrix2n(Y, name="Y")
    n = mode_count(arr)
    J = symplectic_form(n)
    _require_skew_hamiltonian(arr, tol)
    if is_degenerate(arr, tol):
        raise PreconditionViolated(PreconditionReason.DEGENERATE, "Y is numerically singular")

    values = eigvals(arr)
    radius = float(np.max(np.abs(values)))
    cluster_tol = math.sqrt(tol.imag_tol) * (1.0 + radius)
    null_tol = math.sqrt(tol.imag_tol) * (1.0 + float(np.linalg.norm(arr)))
    pairing_tol = math.sqrt(tol.imag_tol)
    real_threshold = tol.realness_threshold(radius)

    centres = _pair_eigenvalues(values, cluster_tol)
    real_centres = sorted(c.real for c in centres if abs(c.imag) <= real_threshold)
    upper = sorted((c for c in centres if c.imag > real_threshold), key=lambda c: (c.real, c.imag))
    lower = [c for c in centres if c.imag < -real_threshold]
    if len(upper) != len(lower) or len(real_centres) + 2 * len(upper) != n:
        raise DefectiveEigenstructure("eigenvalue pairs do not split into a symplectic basis")

    pairs: list[tuple[np.ndarray, np.ndarray]] = []
    blocks: list[int] = []
    for value in real_centres:
        e, f = _eigenspace(arr, value, null_tol)
        pairs.append((e.real, f.real))
        blocks.append(1)
    for value in upper:
        u, v = _eigenspace(arr, value, null_tol)
        E = np.column_stack([u.real, u.imag])
        F0 = np.column_stack([v.real, v.imag])
        gram = E.T @ J @ F0
        if np.linalg.cond(gram) > 1.0 / pairing_tol:
            raise DefectiveEigenstructure(
                f"symplectic pairing of the eigenspace of {value:.6g} is numerically singular"
            )
        F = -F0 @ np.linalg.inv(gram)
        pairs.append((E[:, 0], F[:, 0]))
        pairs.append((E[:, 1], F[:, 1]))
        blocks.append(2)

    # Symplectic Gram-Schmidt: omega(e_i, f_j) = -delta_ij, all other pairings vanish.
    basis: list[tuple[np.ndarray, np.ndarray]] = []
    for e, f in pairs:
        for pe, pf in basis:
            e = e + _omega(J, e, pf) * pe - _omega(J, e, pe) * pf
            f = f + _omega(J, f, pf) * pe - _omega(J, f, pe) * pf
        g = _omega(J, e, f)
        if abs(g) <= pairing_tol * float(np.linalg.norm(e) * np.linalg.norm(f)):
            raise DefectiveEigenstructure("symplectic pairing of an eigenspace is numerically singular")
        root = math.sqrt(abs(g))
        basis.append((e / root, -math.copysign(1.0, g) * f / root))

    S = np.column_stack([e for e, _ in basis] + [f for _, f in basis])
    S_inv = symplectic_inverse(S)
    similar = S_inv @ arr @ S
    N = np.zeros((n, n))
    offset = 0
    for size in blocks:
        sl = slice(offset, offset + size)
        top = similar[sl, sl]
        bottom = similar[n + offset : n + offset + size, n + offset : n + offset + size]
        N[sl, sl] = 0.5 * (top + bottom.T)
        offset += size

    symplectic_check = check_structure(S, StructureKind.SYMPLECTIC, tol)
    if not symplectic_check.holds:
        raise DefectiveEigenstructure(
            f"symplectic basis residual {symplectic_check.residual:.3e} exceeds {symplectic_check.bound:.3e}"
        )
    result = SymplecticBlockDiagonalization(S=S, N=N, blocks=tuple(blocks))
    residual = float(np.linalg.norm(result.reconstruct() - arr))
    scale = float(np.linalg.norm(S) * np.linalg.norm(S_inv) * np.linalg.norm(arr))
    if not tol.accepts(residual, scale):
        raise DefectiveEigenstructure(
            f"block diagonalization residual {residual:.3e} exceeds {tol.bound(scale):.3e}"
        )
    logger.debug("Symplectic block diagonalization: blocks=%s residual=%.3e", blocks, residual)
    return result


def _krylov(N: np.ndarray, seed: np.ndarray) -> np.ndarray:
    columns = [seed]
    for _ in range(N.shape[0] - 1):
        columns.append(N @ columns[-1])
    return np.column_stack(columns)


def _krylov_seeds(size: int) -> Iterator[np.ndarray]:
    for i in range(size):
        yield np.eye(size)[:, i]
    rng = np.random.default_rng(_KRYLOV_RNG_SEED)
    for _ in range(_KRYLOV_RANDOM_ATTEMPTS):
        seed = rng.standard_normal(size)
        yield seed / np.linalg.norm(seed)


def symmetric_pair_factorization(
    N: Any, tol: TolerancePolicy = DEFAULT_TOLERANCE
) -> tuple[np.ndarray, np.ndarray]:
    """Factor ``N = P Q`` with ``P`` and ``Q`` symmetric.

    For a Krylov basis ``K`` of ``N`` and the Hankel moment matrix
    ``T_ij = v^T N^(i+j) v``, ``W = K T^{-1} K^T`` is symmetric with
    ``N W = W N^T``; then ``P = N W`` and ``Q = W^{-1}``.
    """
    arr = as_square(N, name="N")
    size = arr.shape[0]
    scale = float(np.linalg.norm(arr))
    if scale == 0.0:
        return np.zeros_like(arr), np.eye(size)
    if tol.accepts(float(np.linalg.norm(arr - arr.T)), scale):
        return 0.5 * (arr + arr.T), np.eye(size)

    unit = arr / scale
    limit = 1.0 / tol.rel_tol
    for attempt, seed in enumerate(_krylov_seeds(size)):
        K = _krylov(unit, seed)
        if np.linalg.cond(K) > limit:
            continue
        L = _krylov(unit.T, seed)
        moments = L.T @ K
        moments = 0.5 * (moments + moments.T)
        if np.linalg.cond(moments) > limit:
            continue
        W = K @ np.linalg.solve(moments, K.T)
        W = 0.5 * (W + W.T)
        P = unit @ W
        P = 0.5 * (P + P.T)
        Q = np.linalg.solve(K.T, np.linalg.solve(K.T, moments).T).T
        Q = 0.5 * (Q + Q.T)
        residual = float(np.linalg.norm(P @ Q - unit))
        if tol.accepts(residual, 1.0):
            root = math.sqrt(scale)
            return root * P, root * Q
        logger.warning("Krylov seed %d rejected: residual %.3e", attempt, residual)
    raise DerogatoryInput("no Krylov seed reached a well-conditioned full-rank basis; N looks derogatory")


def hamiltonian_sqrt(
    Y: Any,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
    *,
    method: Literal["blocks", "principal"] = "blocks",
) -> np.ndarray:
    """Hamiltonian ``H`` with ``H^2 = Y`` for a nondegenerate eigen-generic skew-Hamiltonian ``Y``.

    ``method="principal"`` uses ``H = M S D S^{-1}`` with ``M`` the principal
    root; it needs ``Y`` free of zero and negative real eigenvalues.
    """
    arr = as_matrix2n(Y, name="Y")
    n = mode_count(arr)
    form = symplectic_block_diagonalize(arr, tol)
    S_inv = symplectic_inverse(form.S)
    if method == "blocks":
        P_blocks: list[np.ndarray] = []
        Q_blocks: list[np.ndarray] = []
        offset = 0
        for size in form.blocks:
            sl = slice(offset, offset + size)
            P_k, Q_k = symmetric_pair_factorization(form.N[sl, sl], tol)
            P_blocks.append(P_k)
            Q_blocks.append(Q_k)
            offset += size
        zero = np.zeros((n, n))
        H0 = np.block([[zero, block_diag(*P_blocks)], [block_diag(*Q_blocks), zero]])
        H = form.S @ H0 @ S_inv
    elif method == "principal":
        M = skew_hamiltonian_principal_sqrt(arr, tol)
        H = M @ form.S @ signature_matrix(n) @ S_inv
    else:
        raise ValueError(f"Unknown Hamiltonian root method: {method!r}")

    structure = check_structure(H, StructureKind.HAMILTONIAN, tol)
    residual = float(np.linalg.norm(H @ H - arr))
    scale = float(np.linalg.norm(H)) ** 2
    if not structure.holds or not tol.accepts(residual, scale):
        raise DefectiveEigenstructure(
            f"Hamiltonian root is numerically unreliable (structure {structure.residual:.3e}, "
            f"root residual {residual:.3e})"
        )
    logger.debug("Hamiltonian sqrt (%s): structure=%.3e root=%.3e", method, structure.residual, residual)
    return H


__all__ = [
    "SymplecticBlockDiagonalization",
    "skew_hamiltonian_principal_sqrt",
    "symplectic_block_diagonalize",
    "symmetric_pair_factorization",
    "hamiltonian_sqrt",
]
