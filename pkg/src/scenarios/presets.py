from typing import Any, Mapping

from pydantic import ValidationError

from src.core.constants import PRESET_NAMES, PRESETS
from src.core.exceptions import ConfigError, InvalidConfigValue, UnknownPreset
from src.scenarios.schemas import Scenario
from src.services.dirac_modes.exceptions import DiracModesError


def build_scenario(fields: Mapping[str, Any]) -> Scenario:
    """Validate scenario fields, reporting failures as config errors."""
    unknown = set(fields) - set(Scenario.model_fields)
    if unknown:
        key = sorted(unknown)[0]
        raise InvalidConfigValue(key, str(fields[key]), "unknown key")
    try:
        return Scenario(**fields)
    except ValidationError as exc:
        error = exc.errors()[0]
        key = ".".join(str(part) for part in error["loc"]) or "scenario"
        value = fields.get(key, "")
        raise InvalidConfigValue(key, str(value), error["msg"]) from exc
    except DiracModesError as exc:
        raise ConfigError(f"Scenario is not well posed: {exc}") from exc


def preset(name: str, **overrides: Any) -> Scenario:
    """
    Scenario for a named preset, optionally with fields replaced.

    Step presets use m = 1, K0 = 1/sqrt(3) and lambda = 100 (the case 0
    packet is at rest with lambda = 0.1); barrier presets use K0 = 4/3.
    """
    if name not in PRESETS:
        raise UnknownPreset(name)
    return build_scenario({"name": name, **PRESETS[name], **overrides})


def preset_names() -> tuple[str, ...]:
    return PRESET_NAMES
