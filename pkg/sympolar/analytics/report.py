"""
Machine-readable reports for every command-line operation.

A report's ``verdict`` is "ok" exactly when every residual it records is
within the bound recorded next to it.
"""

from __future__ import annotations

from datetime import datetime, timezone
from typing import Any, Literal, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, Field

from sympolar.channels.gaussian import (
    ChannelClassification,
    ChannelNormalForm,
    ChannelValidity,
    GaussianChannelTriple,
)
from sympolar.core.enums import Variant
from sympolar.core.models import StructureCheck, TolerancePolicy
from sympolar.decompositions.polar import Factorization, VerificationReport, stored_slots

Verdict = Literal["ok", "fail"]


class FactorReport(BaseModel):
    name: str
    kind: str
    residual: float
    bound: float
    holds: bool


class ReportDocument(BaseModel):
    operation: str
    verdict: Verdict
    exit_code: int = 0
    input: Optional[str] = None
    variant: Optional[str] = None
    case: Optional[str] = None
    message: Optional[str] = None
    factors: list[FactorReport] = Field(default_factory=list)
    reconstruction_residual: Optional[float] = None
    reconstruction_bound: Optional[float] = None
    classification: Optional[dict[str, Any]] = None
    details: dict[str, Any] = Field(default_factory=dict)
    tolerance: dict[str, float] = Field(default_factory=dict)
    seed: Optional[int] = None
    timestamp: Optional[str] = None


def _verdict(ok: bool) -> Verdict:
    return "ok" if ok else "fail"


def _matrix(X: np.ndarray) -> list[list[float]]:
    return np.asarray(X, dtype=float).tolist()


def _factor_reports(names: Sequence[str], checks: Sequence[StructureCheck]) -> list[FactorReport]:
    return [
        FactorReport(
            name=name,
            kind=check.kind.value,
            residual=check.residual,
            bound=check.bound,
            holds=check.holds,
        )
        for name, check in zip(names, checks)
    ]


def channel_payload(c: GaussianChannelTriple) -> dict[str, Any]:
    return {"K": _matrix(c.K), "l": c.l.tolist(), "alpha": _matrix(c.alpha)}


def factorization_report(
    operation: str,
    result: Union[Factorization, VerificationReport],
    variant: str,
    tol: TolerancePolicy,
    *,
    input: Optional[str] = None,
    seed: Optional[int] = None,
) -> ReportDocument:
    names = [slot.name for slot in stored_slots(Variant(variant))]
    factors = _factor_reports(names, result.structure_report)
    ok = result.reconstruction.holds and all(factor.holds for factor in factors)
    spectrum = result.classification if isinstance(result, Factorization) else None
    return ReportDocument(
        operation=operation,
        verdict=_verdict(ok),
        exit_code=0 if ok else 4,
        input=input,
        variant=variant,
        factors=factors,
        classification=dict(spectrum.summary()) if spectrum is not None else None,
        reconstruction_residual=result.reconstruction.residual,
        reconstruction_bound=result.reconstruction.bound,
        tolerance=tol.as_dict(),
        seed=seed,
    )


def failure_report(
    operation: str,
    exc: BaseException,
    exit_code: int,
    tol: TolerancePolicy,
    *,
    input: Optional[str] = None,
    variant: Optional[str] = None,
    case: Optional[str] = None,
) -> ReportDocument:
    details: dict[str, Any] = {"error": type(exc).__name__}
    reason = getattr(exc, "reason", None)
    if reason is not None:
        details["reason"] = reason.value
    eigenvalues = getattr(exc, "eigenvalues", ())
    if eigenvalues:
        details["offending_eigenvalues"] = [float(np.real(v)) for v in eigenvalues]
    return ReportDocument(
        operation=operation,
        verdict="fail",
        exit_code=exit_code,
        input=input,
        variant=variant,
        case=case,
        message=str(exc),
        details=details,
        tolerance=tol.as_dict(),
    )


def validity_report(
    validity: ChannelValidity, tol: TolerancePolicy, *, input: Optional[str] = None
) -> ReportDocument:
    return ReportDocument(
        operation="channel validate",
        verdict=_verdict(validity.valid),
        exit_code=0 if validity.valid else 4,
        input=input,
        details={"valid": validity.valid, "min_eigenvalue": validity.min_eigenvalue, "bound": validity.bound},
        tolerance=tol.as_dict(),
    )


def composition_report(
    product: GaussianChannelTriple, tol: TolerancePolicy, *, inputs: Sequence[str] = ()
) -> ReportDocument:
    return ReportDocument(
        operation="channel compose",
        verdict="ok",
        input=", ".join(inputs) or None,
        details={"product": channel_payload(product)},
        tolerance=tol.as_dict(),
    )


def classification_report(
    info: ChannelClassification, tol: TolerancePolicy, *, input: Optional[str] = None
) -> ReportDocument:
    details: dict[str, Any] = {
        "admissible_cases": [case.value for case in info.admissible_cases],
        "determinant": info.determinant,
    }
    auto = info.auto_case
    if auto is not None:
        details["auto_case"] = auto.value
    if info.holevo_case is not None:
        details["holevo_case"] = info.holevo_case
    return ReportDocument(
        operation="channel classify",
        verdict="ok",
        input=input,
        classification=dict(info.classification.summary()),
        details=details,
        tolerance=tol.as_dict(),
    )


def normal_form_report(
    form: ChannelNormalForm, tol: TolerancePolicy, *, input: Optional[str] = None
) -> ReportDocument:
    names = [slot.name for slot in stored_slots(form.factorization.variant)]
    factors = _factor_reports(names, form.factorization.structure_report)
    S2, h2 = form.left
    S1, h1 = form.right
    details: dict[str, Any] = {
        "canonical": channel_payload(form.canonical),
        "left": {"S": _matrix(S2), "h": h2.tolist()},
        "right": {"S": _matrix(S1), "h": h1.tolist()},
        "core_factor": _matrix(form.core_factor),
    }
    if form.williamson is not None:
        details["symplectic_eigenvalues"] = form.williamson.nu.tolist()
    return ReportDocument(
        operation="channel normal-form",
        verdict=_verdict(form.ok),
        exit_code=0 if form.ok else 4,
        input=input,
        variant=form.factorization.variant.value,
        case=form.case.value,
        factors=factors,
        reconstruction_residual=form.reconstruction_residual,
        reconstruction_bound=form.reconstruction_bound,
        details=details,
        tolerance=tol.as_dict(),
    )


def stamp(report: ReportDocument, enabled: bool = True) -> ReportDocument:
    if not enabled:
        return report
    now = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    return report.model_copy(update={"timestamp": now})


__all__ = [
    "FactorReport",
    "ReportDocument",
    "channel_payload",
    "factorization_report",
    "failure_report",
    "validity_report",
    "composition_report",
    "classification_report",
    "normal_form_report",
    "stamp",
]
