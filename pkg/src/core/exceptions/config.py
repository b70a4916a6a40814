from .base import CoreException


class ConfigError(CoreException):
    """Raised when there is an error in configuration."""

    pass


class UnknownPreset(ConfigError):
    """Raised when a preset name is not registered."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown preset '{name}'")


class InvalidConfigValue(ConfigError):
    """Raised when a config file entry cannot be parsed."""

    def __init__(self, key: str, value: str, reason: str):
        self.key = key
        self.value = value
        super().__init__(f"Invalid value {value!r} for '{key}': {reason}")
