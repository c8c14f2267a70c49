"""Catalogue of the operations the command line exposes.

Single source of truth for variant names, channel cases, generator kinds and
run settings; the CLI derives its argument choices from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from sympolar.core.enums import ChannelCase, GeneratorKind, Variant
from sympolar.decompositions.polar import VARIANT_LAYOUTS


@dataclass(frozen=True)
class ParamDef:
    name: str
    type: str
    required: bool = True
    default: Optional[Any] = None
    description: Optional[str] = None


@dataclass(frozen=True)
class ComponentDef:
    category: str
    type: str
    summary: str
    params: list[ParamDef] = field(default_factory=list)


_Y = "Y = -X J X^T J"
_Y_LEFT = "Y' = -X^T J X J"
_GENERIC = "det X != 0 and {y} eigen-generic"
_NO_NEGATIVE = "{y} has no zero or negative real eigenvalues"
_NO_POSITIVE = "{y} has no zero or positive real eigenvalues"

_VARIANT_PRECONDITIONS = {
    Variant.HT: _GENERIC.format(y=_Y),
    Variant.RDS: _GENERIC.format(y=_Y),
    Variant.TH: _GENERIC.format(y=_Y_LEFT),
    Variant.SDR: _GENERIC.format(y=_Y_LEFT),
    Variant.MS: _NO_NEGATIVE.format(y=_Y),
    Variant.AS: _NO_NEGATIVE.format(y=_Y),
    Variant.SM: _NO_NEGATIVE.format(y=_Y_LEFT),
    Variant.SA: _NO_NEGATIVE.format(y=_Y_LEFT),
    Variant.MDS: _NO_POSITIVE.format(y=_Y),
    Variant.ADS: _NO_POSITIVE.format(y=_Y),
    Variant.SDM: _NO_POSITIVE.format(y=_Y_LEFT),
    Variant.SDA: _NO_POSITIVE.format(y=_Y_LEFT),
}

_CASE_SUMMARIES = {
    ChannelCase.DR_FORM: "(D R, 0, Lambda) with R symmetric; needs det K != 0",
    ChannelCase.A_FORM: "(A, 0, Lambda) with A skew-symmetric; -K^T J K J without zero/negative real eigenvalues",
    ChannelCase.DA_FORM: "(D A, 0, Lambda) with A skew-symmetric; -K^T J K J without zero/positive real eigenvalues",
    ChannelCase.AUTO: "First admissible of AForm, DAForm, DRForm",
}

_GENERATOR_SUMMARIES = {
    GeneratorKind.NONDEGENERATE: "Gaussian matrix with condition number <= 1e6",
    GeneratorKind.SYMPLECTIC: "Product of elementary symplectic shears and block scalings",
    GeneratorKind.SKEW_HAMILTONIAN: "[[A, G], [Q, A^T]] with G, Q skew-symmetric",
    GeneratorKind.VALID_CHANNEL: "Channel triple shifted onto the validity condition",
}


def _variant_summary(variant: Variant) -> str:
    slots = " ".join(
        "D" if slot.kind is None else f"{slot.name}:{slot.kind.value}" for slot in VARIANT_LAYOUTS[variant]
    )
    return f"X = {slots}; requires {_VARIANT_PRECONDITIONS[variant]}"


def list_definitions() -> list[ComponentDef]:
    """Return supported operations for help output and documentation."""

    tolerance_params = [
        ParamDef(
            name="rel_tol",
            type="float",
            required=False,
            default=1e-9,
            description="Residual acceptance: residual <= rel_tol * (1 + scale)",
        ),
        ParamDef(
            name="imag_tol",
            type="float",
            required=False,
            default=1e-9,
            description="Eigenvalues with |Im| <= imag_tol * (1 + spectral radius) count as real",
        ),
    ]
    definitions = [
        ComponentDef(category="decomposition", type=variant.value.lower(), summary=_variant_summary(variant))
        for variant in Variant
    ]
    definitions += [
        ComponentDef(category="channel_case", type=case.value, summary=_CASE_SUMMARIES[case])
        for case in ChannelCase
    ]
    definitions += [
        ComponentDef(
            category="generator",
            type=kind.value,
            summary=_GENERATOR_SUMMARIES[kind],
            params=[ParamDef(name="n", type="int"), ParamDef(name="seed", type="int")],
        )
        for kind in GeneratorKind
    ]
    definitions.append(
        ComponentDef(
            category="settings",
            type="run",
            summary="Run settings read from --config",
            params=[
                ParamDef(name="tolerance", type="object", required=False, description="rel_tol / imag_tol"),
                ParamDef(name="jobs", type="int", required=False, default=1),
                ParamDef(name="timestamp", type="bool", required=False, default=True),
                ParamDef(name="logging", type="object", required=False, description="level / json"),
            ]
            + tolerance_params,
        )
    )
    return definitions


def iter_definition_dicts() -> Iterable[dict[str, Any]]:
    """Yield definitions as plain dicts for consumers that avoid dataclasses."""

    for definition in list_definitions():
        yield {
            "category": definition.category,
            "type": definition.type,
            "summary": definition.summary,
            "params": [
                {
                    "name": param.name,
                    "type": param.type,
                    "required": param.required,
                    "default": param.default,
                    "description": param.description,
                }
                for param in definition.params
            ],
        }


def choices(category: str) -> list[str]:
    return [definition.type for definition in list_definitions() if definition.category == category]


__all__ = ["ParamDef", "ComponentDef", "list_definitions", "iter_definition_dicts", "choices"]
