from sympolar.configuration import choices, iter_definition_dicts, list_definitions
from sympolar.core import ChannelCase, GeneratorKind, Variant


def _types_for(category: str) -> set[str]:
    return {
        definition.type
        for definition in list_definitions()
        if definition.category == category
    }


def test_decomposition_definitions_cover_every_variant() -> None:
    assert _types_for("decomposition") == {variant.value.lower() for variant in Variant}


def test_channel_case_definitions_cover_every_case() -> None:
    assert _types_for("channel_case") == {case.value for case in ChannelCase}


def test_generator_definitions_expose_seed() -> None:
    defs = [d for d in list_definitions() if d.category == "generator"]
    assert {d.type for d in defs} == {kind.value for kind in GeneratorKind}
    for definition in defs:
        params = {p.name for p in definition.params}
        assert {"n", "seed"} == params


def test_settings_definitions_expose_tolerances() -> None:
    target = next(d for d in list_definitions() if d.category == "settings")
    params = {p.name for p in target.params}
    assert {"tolerance", "jobs", "timestamp", "logging", "rel_tol", "imag_tol"}.issubset(params)


def test_variant_summaries_name_their_preconditions() -> None:
    summaries = {d.type: d.summary for d in list_definitions() if d.category == "decomposition"}
    assert "Y = -X J X^T J" in summaries["ms"]
    assert "Y' = -X^T J X J" in summaries["sdr"]
    assert "no zero or positive" in summaries["mds"]


def test_definition_dicts_and_choices_agree() -> None:
    dicts = list(iter_definition_dicts())
    assert len(dicts) == len(list_definitions())
    assert choices("decomposition") == [d["type"] for d in dicts if d["category"] == "decomposition"]
