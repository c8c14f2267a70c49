"""
Residual reports for decompositions and channel operations.
"""

from .report import (
    FactorReport,
    ReportDocument,
    classification_report,
    composition_report,
    factorization_report,
    failure_report,
    normal_form_report,
    stamp,
    validity_report,
)

__all__ = [
    "FactorReport",
    "ReportDocument",
    "classification_report",
    "composition_report",
    "factorization_report",
    "failure_report",
    "normal_form_report",
    "stamp",
    "validity_report",
]
