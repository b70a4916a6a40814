import functools
import logging
import time
from typing import Callable, ParamSpec, TypeVar

logger = logging.getLogger(__name__)

ReturnType = TypeVar("ReturnType")
Parameters = ParamSpec("Parameters")


def timer_of_execution(
    func: Callable[Parameters, ReturnType],
) -> Callable[Parameters, ReturnType]:
    @functools.wraps(func)
    def wrapper(
        *args: Parameters.args, **kwargs: Parameters.kwargs
    ) -> ReturnType:
        start_time = time.perf_counter()
        result = func(*args, **kwargs)
        end_time = time.perf_counter()

        logger.info(
            f"Function {func.__name__} took "
            f"{end_time - start_time:0.4f} seconds"
        )

        return result

    return wrapper


class WallClock:
    """Context manager recording elapsed wall time in ``seconds``."""

    def __enter__(self) -> "WallClock":
        self._start = time.perf_counter()
        self.seconds = 0.0
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.seconds = time.perf_counter() - self._start
