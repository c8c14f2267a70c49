"""Per-input command execution shared by the CLI and its worker processes.

Every operation returns a :class:`ReportDocument`; library errors become
failure reports carrying the exit code of the error class.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Optional, Sequence

from sympolar.analytics.report import ReportDocument, factorization_report, failure_report
from sympolar.core.models import TolerancePolicy
from sympolar.data.documents import MatrixFile, load_matrix_file, write_document
from sympolar.decompositions.polar import decompose, stored_slots
from sympolar.errors import (
    AsymmetricAlpha,
    DefectiveEigenstructure,
    DerogatoryInput,
    NonConvergence,
    NumericalBreakdown,
    PreconditionViolated,
    SympolarError,
    VerificationError,
)

logger = logging.getLogger(__name__)


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (PreconditionViolated, AsymmetricAlpha)):
        return 2
    if isinstance(
        exc, (DefectiveEigenstructure, DerogatoryInput, NonConvergence, NumericalBreakdown)
    ):
        return 3
    if isinstance(exc, VerificationError):
        return 4
    return 1


def run_operation(
    operation: str,
    tol: TolerancePolicy,
    body: Callable[[], ReportDocument],
    **context: Optional[str],
) -> ReportDocument:
    try:
        return body()
    except (SympolarError, OSError) as exc:
        logger.debug("%s failed: %s", operation, exc)
        return failure_report(operation, exc, exit_code_for(exc), tol, **context)
    except ValueError as exc:
        # documents are parsed into DocumentError, so this came from the numerics
        breakdown = NumericalBreakdown(str(exc))
        logger.debug("%s broke down: %s", operation, exc)
        return failure_report(operation, breakdown, exit_code_for(breakdown), tol, **context)


def decompose_file(
    path: str,
    variant: str,
    rel_tol: float,
    imag_tol: float,
    factors_dir: Optional[str] = None,
) -> ReportDocument:
    """Decompose one matrix document and optionally write its factors as ``<stem>.<index>-<slot>.json``."""
    tol = TolerancePolicy(rel_tol=rel_tol, imag_tol=imag_tol)

    def body() -> ReportDocument:
        document = load_matrix_file(path)
        result = decompose(document.matrix(), variant, tol)
        if factors_dir is not None:
            stem = Path(path).stem
            for index, (slot, matrix) in enumerate(zip(stored_slots(result.variant), result.factors)):
                write_document(
                    Path(factors_dir) / f"{stem}.{index}-{slot.name}.json",
                    MatrixFile.from_matrix(
                        matrix,
                        label=f"{stem} {result.variant.value} {slot.name}",
                        kind=slot.kind.value if slot.kind is not None else None,
                    ),
                )
        return factorization_report(
            "decompose", result, result.variant.value, tol, input=path, seed=document.seed
        )

    return run_operation("decompose", tol, body, input=path, variant=variant)


def decompose_batch(
    paths: Sequence[str],
    variant: str,
    tol: TolerancePolicy,
    *,
    jobs: int = 1,
    factors_dir: Optional[str] = None,
) -> list[ReportDocument]:
    """Reports in input order; ``jobs > 1`` spreads inputs over worker processes."""
    count = len(paths)
    columns = (
        list(paths),
        [variant] * count,
        [tol.rel_tol] * count,
        [tol.imag_tol] * count,
        [factors_dir] * count,
    )
    if jobs > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(decompose_file, *columns))
    return [decompose_file(*args) for args in zip(*columns)]


__all__ = ["exit_code_for", "run_operation", "decompose_file", "decompose_batch"]
