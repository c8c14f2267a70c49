from dataclasses import dataclass, field

import numpy as np

from .enums import StructureKind


@dataclass(frozen=True)
class TolerancePolicy:
    """
    Thresholds shared by every structure and spectrum verdict.

    A residual is accepted when ``residual <= rel_tol * (1 + scale)``; for
    structure checks ``scale`` is ``||X||_F**2`` because the defining
    residuals are quadratic in the input.
    """

    rel_tol: float = 1e-9
    imag_tol: float = 1e-9

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive.")
        if not self.imag_tol > 0:
            raise ValueError("imag_tol must be positive.")

    def bound(self, scale: float) -> float:
        return self.rel_tol * (1.0 + scale)

    def accepts(self, residual: float, scale: float) -> bool:
        return residual <= self.bound(scale)

    def realness_threshold(self, spectral_radius: float) -> float:
        return self.imag_tol * (1.0 + spectral_radius)

    def as_dict(self) -> dict[str, float]:
        return {"rel_tol": self.rel_tol, "imag_tol": self.imag_tol}


DEFAULT_TOLERANCE = TolerancePolicy()


@dataclass(frozen=True)
class StructureCheck:
    """Verdict of a single structure predicate."""

    kind: StructureKind
    residual: float
    bound: float

    @property
    def holds(self) -> bool:
        return self.residual <= self.bound


@dataclass(frozen=True)
class EigenClassification:
    """
    Sign bookkeeping of the real part of a spectrum.

    An eigenvalue counts as real iff ``|Im| <= imag_tol * (1 + rho)`` and as
    zero iff additionally ``|Re|`` is within the same threshold.
    """

    has_zero: bool
    has_negative_real: bool
    has_positive_real: bool
    real_eigenvalues: tuple[float, ...]
    spectral_radius: float
    eigenvalues: tuple[complex, ...] = field(default=(), repr=False)

    @property
    def negative_real(self) -> tuple[float, ...]:
        return tuple(v for v in self.real_eigenvalues if v < 0)

    @property
    def positive_real(self) -> tuple[float, ...]:
        return tuple(v for v in self.real_eigenvalues if v > 0)

    def swapped(self) -> "EigenClassification":
        """Classification of the negated matrix."""
        return EigenClassification(
            has_zero=self.has_zero,
            has_negative_real=self.has_positive_real,
            has_positive_real=self.has_negative_real,
            real_eigenvalues=tuple(-v for v in self.real_eigenvalues),
            spectral_radius=self.spectral_radius,
            eigenvalues=tuple(-v for v in self.eigenvalues),
        )

    def summary(self) -> dict[str, object]:
        return {
            "has_zero": self.has_zero,
            "has_negative_real": self.has_negative_real,
            "has_positive_real": self.has_positive_real,
            "real_eigenvalues": list(self.real_eigenvalues),
            "spectral_radius": self.spectral_radius,
        }


@dataclass(frozen=True, eq=False)
class RealSchurForm:
    """``A = Q T Q^T`` with ``Q`` orthogonal and ``T`` quasi-upper-triangular."""

    Q: np.ndarray
    T: np.ndarray

    @property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """``(start, size)`` of every 1x1 and 2x2 diagonal block of ``T``."""
        size = self.T.shape[0]
        out: list[tuple[int, int]] = []
        i = 0
        while i < size:
            if i + 1 < size and self.T[i + 1, i] != 0.0:
                out.append((i, 2))
                i += 2
            else:
                out.append((i, 1))
                i += 1
        return tuple(out)

    def eigenvalues(self) -> np.ndarray:
        values: list[complex] = []
        for start, size in self.blocks:
            if size == 1:
                values.append(complex(self.T[start, start]))
                continue
            (a, b), (c, d) = self.T[start : start + 2, start : start + 2]
            # LAPACK standardizes to a == d, so disc is b*c without cancellation
            mean = 0.5 * (a + d)
            half_gap = 0.5 * (a - d)
            disc = half_gap * half_gap + b * c
            root = float(np.sqrt(abs(disc)))
            if disc >= 0:
                values.extend([complex(mean + root), complex(mean - root)])
            else:
                values.extend([complex(mean, root), complex(mean, -root)])
        return np.asarray(values, dtype=complex)

    def reconstruct(self) -> np.ndarray:
        return self.Q @ self.T @ self.Q.T
