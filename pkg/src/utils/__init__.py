from src.utils.output_paths import OutputPaths
from src.utils.performance_monitoring.timer_of_execution import (
    WallClock,
    timer_of_execution,
)

__all__ = ["OutputPaths", "WallClock", "timer_of_execution"]
