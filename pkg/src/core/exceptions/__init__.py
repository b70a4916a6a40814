from .base import CoreException
from .config import ConfigError, InvalidConfigValue, UnknownPreset

__all__ = [
    "CoreException",
    "ConfigError",
    "InvalidConfigValue",
    "UnknownPreset",
]
