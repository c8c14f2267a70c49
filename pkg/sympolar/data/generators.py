"""Seeded random instances for tests and the ``generate`` command."""

import logging
from typing import Union

import numpy as np

from sympolar.channels.gaussian import GaussianChannelTriple
from sympolar.core.enums import GeneratorKind
from sympolar.core.symplectic import check_mode_count, symplectic_form

logger = logging.getLogger(__name__)

MAX_CONDITION = 1e6
MAX_ATTEMPTS = 1000


class RandomInstanceGenerator:
    """Reproducible structured matrices: the same seed yields the same sequence."""

    def __init__(self, seed: int) -> None:
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    def _gaussian(self, rows: int, cols: int) -> np.ndarray:
        return self.rng.standard_normal((rows, cols))

    def _symmetric(self, size: int) -> np.ndarray:
        G = self._gaussian(size, size)
        return 0.5 * (G + G.T)

    def _skew(self, size: int) -> np.ndarray:
        G = self._gaussian(size, size)
        return 0.5 * (G - G.T)

    def nondegenerate(self, n: int) -> np.ndarray:
        """Gaussian 2n x 2n matrix, resampled until its condition number is at most 1e6."""
        size = 2 * check_mode_count(n)
        for attempt in range(MAX_ATTEMPTS):
            X = self._gaussian(size, size)
            if np.linalg.cond(X) <= MAX_CONDITION:
                if attempt:
                    logger.debug("nondegenerate: accepted after %d resamples", attempt)
                return X
        raise RuntimeError(f"No matrix with condition <= {MAX_CONDITION:g} after {MAX_ATTEMPTS} draws")

    def symplectic(self, n: int, scale: float = 0.5) -> np.ndarray:
        """Product of an upper shear, a block scaling ``diag(A, A^-T)`` and a lower shear."""
        n = check_mode_count(n)
        eye = np.eye(n)
        zero = np.zeros((n, n))
        upper = np.block([[eye, scale * self._symmetric(n)], [zero, eye]])
        lower = np.block([[eye, zero], [scale * self._symmetric(n), eye]])
        while True:
            A = eye + 0.3 * self._gaussian(n, n) / np.sqrt(n)
            if np.linalg.cond(A) <= 10.0:
                break
        scaling = np.block([[A, zero], [zero, np.linalg.inv(A).T]])
        return upper @ scaling @ lower

    def skew_hamiltonian(self, n: int) -> np.ndarray:
        """``[[A, G], [Q, A^T]]`` with ``G`` and ``Q`` skew-symmetric."""
        n = check_mode_count(n)
        A = self._gaussian(n, n)
        return np.block([[A, self._skew(n)], [self._skew(n), A.T]])

    def valid_channel(self, n: int, margin: float = 1e-6) -> GaussianChannelTriple:
        """Random ``K``, ``l`` with ``alpha`` shifted just enough to satisfy the channel condition."""
        n = check_mode_count(n)
        size = 2 * n
        K = self.nondegenerate(n) / np.sqrt(size)
        B = self._gaussian(size, size)
        B = B @ B.T / size
        J = symplectic_form(n)
        hermitian = B - 0.5j * (J - K.T @ J @ K)
        shift = max(0.0, -float(np.linalg.eigvalsh(hermitian)[0])) + margin
        l = self._gaussian(size, 1).reshape(-1)  # noqa: E741
        return GaussianChannelTriple(K=K, l=l, alpha=B + shift * np.eye(size))

    def generate(self, kind: Union[GeneratorKind, str], n: int) -> Union[np.ndarray, GaussianChannelTriple]:
        kind = GeneratorKind(kind)
        if kind is GeneratorKind.NONDEGENERATE:
            return self.nondegenerate(n)
        if kind is GeneratorKind.SYMPLECTIC:
            return self.symplectic(n)
        if kind is GeneratorKind.SKEW_HAMILTONIAN:
            return self.skew_hamiltonian(n)
        return self.valid_channel(n)


def generate(kind: Union[GeneratorKind, str], n: int, seed: int) -> Union[np.ndarray, GaussianChannelTriple]:
    return RandomInstanceGenerator(seed).generate(kind, n)


__all__ = ["MAX_CONDITION", "RandomInstanceGenerator", "generate"]
