from src.scenarios.config_loader import load_scenario
from src.scenarios.presets import preset, preset_names
from src.scenarios.runner import RunOutputs, RunReport, run
from src.scenarios.schemas import Scenario

__all__ = [
    "RunOutputs",
    "RunReport",
    "Scenario",
    "load_scenario",
    "preset",
    "preset_names",
    "run",
]
