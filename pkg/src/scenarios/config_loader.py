"""
Scenario config files.

A config file is flat ``key=value`` text, one entry per line, ``#``
starting a comment. Keys are Scenario field names (case-insensitive);
the optional ``preset`` key names a preset whose values are used as
defaults. Flag overrides given on the command line win over the file.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from dotenv import dotenv_values

from src.core.exceptions import ConfigError, InvalidConfigValue
from src.scenarios.presets import build_scenario, preset
from src.scenarios.schemas import Scenario

logger = logging.getLogger(__name__)

PRESET_KEY = "preset"


def read_config(path: Path) -> Dict[str, str]:
    if not path.is_file():
        raise ConfigError(f"Config file not found: {path}")

    entries: Dict[str, str] = {}
    for key, value in dotenv_values(path).items():
        if value is None:
            raise InvalidConfigValue(key, "", "missing '=' and value")
        entries[key.strip().lower()] = value.strip()
    return entries


def scenario_from_entries(
    entries: Mapping[str, Any],
    overrides: Optional[Mapping[str, Any]] = None,
) -> Scenario:
    fields = dict(entries)
    fields.update(
        {
            key: value
            for key, value in (overrides or {}).items()
            if value is not None
        }
    )
    preset_name = fields.pop(PRESET_KEY, None)
    if preset_name is None:
        return build_scenario(fields)

    base = preset(str(preset_name))
    merged = base.model_dump(include=base.model_fields_set)
    merged.update(fields)
    return build_scenario(merged)


def load_scenario(
    path: Path, overrides: Optional[Mapping[str, Any]] = None
) -> Scenario:
    scenario = scenario_from_entries(read_config(path), overrides)
    logger.info(f"Loaded scenario '{scenario.name}' from {path}")
    return scenario
