import logging.config

from .logging_config import LOGGING_CONFIG
from .settings import Settings

# Initialize the project settings
settings = Settings()

# Configure logging
logging.config.dictConfig(LOGGING_CONFIG)
