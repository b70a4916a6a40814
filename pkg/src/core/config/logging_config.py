"""
Logging configuration for klein-pilot.

Pipeline milestones go to stderr so CLI stdout carries only the ledger
summary. Quadrature and mode-compilation details are DEBUG and stay
hidden unless KLEIN_PILOT_LOG_LEVEL=DEBUG.
"""

from .settings import Settings

LOG_LEVEL = Settings.LOG_LEVEL

NUMERICS_LEVEL = "DEBUG" if LOG_LEVEL == "DEBUG" else "INFO"

LOGGING_CONFIG = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {
            "format": "{levelname} [{asctime}] ({filename}) {message}",
            "style": "{",
            "datefmt": "%Y-%m-%d %H:%M:%S",
        },
        "brief": {
            "format": "{levelname}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "logging.StreamHandler",
            "formatter": "standard",
            "stream": "ext://sys.stderr",
        },
        "cli": {
            "level": "WARNING",
            "class": "logging.StreamHandler",
            "formatter": "brief",
            "stream": "ext://sys.stderr",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": LOG_LEVEL,
    },
    "loggers": {
        "src.main": {
            "handlers": ["cli"],
            "level": "WARNING",
            "propagate": False,
        },
        "src.services.wavepacket": {"level": NUMERICS_LEVEL},
        "src.services.dirac_modes": {"level": NUMERICS_LEVEL},
    },
}
