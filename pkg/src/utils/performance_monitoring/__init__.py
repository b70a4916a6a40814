from .timer_of_execution import WallClock, timer_of_execution

__all__ = ["WallClock", "timer_of_execution"]
