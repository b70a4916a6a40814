import logging
from functools import wraps
from typing import Callable, ParamSpec

from pydantic import ValidationError

from src.core.constants import (
    EXIT_CONFIG_ERROR,
    EXIT_INVARIANT_FAILURE,
    EXIT_LEDGER_FAILURE,
)
from src.core.exceptions import ConfigError, CoreException
from src.services.accounting.exceptions import LedgerResidualExceeded

logger = logging.getLogger(__name__)

Parameters = ParamSpec("Parameters")


def exit_code_for(e: Exception) -> int:
    if isinstance(e, (ConfigError, ValidationError)):
        return EXIT_CONFIG_ERROR
    elif isinstance(e, LedgerResidualExceeded):
        return EXIT_LEDGER_FAILURE
    elif isinstance(e, CoreException):
        return EXIT_INVARIANT_FAILURE
    raise e


def exit_code_on_error(
    func: Callable[Parameters, int],
) -> Callable[Parameters, int]:
    """Turn domain exceptions raised by a command into CLI exit codes."""

    @wraps(func)
    def wrapper(*args: Parameters.args, **kwargs: Parameters.kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except Exception as e:
            code = exit_code_for(e)
            logger.error(f"{type(e).__name__}: {e}")
            return code

    return wrapper
