import time
from functools import wraps
from typing import Any, Callable


def log_timing(logger) -> Callable:
    """Decorator that logs the wall time of a call at debug level"""
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            if not logger.is_debug():
                return func(*args, **kwargs)
            started = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                elapsed = (time.perf_counter() - started) * 1000
                logger.debug(f"{func.__name__} took {elapsed:.1f} ms")
        return wrapper
    return decorator
