"""Configuration and schema definitions for sympolar."""

from .definitions import ComponentDef, ParamDef, choices, iter_definition_dicts, list_definitions
from .config_file import load_config_dict, load_config_file, loads_jsonc
from .loader import RunSettings, load_settings_from_dict, load_settings_from_json

__all__ = [
    "ComponentDef",
    "ParamDef",
    "choices",
    "iter_definition_dicts",
    "list_definitions",
    "load_config_file",
    "load_config_dict",
    "loads_jsonc",
    "RunSettings",
    "load_settings_from_dict",
    "load_settings_from_json",
]
