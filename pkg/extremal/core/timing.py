import functools
import time
from typing import Callable, TypeVar

from loguru import logger

T = TypeVar("T", bound=Callable)


def timed(func: T) -> T:
    """Log the call arguments at debug level and the duration at info level"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        name = func.__qualname__
        logger.debug(f"Calling {name} with args={args}, kwargs={kwargs}")
        start = time.perf_counter()
        try:
            return func(*args, **kwargs)
        finally:
            duration = time.perf_counter() - start
            logger.info(f"{name} took {duration:.2f} seconds")

    return wrapper  # type: ignore[return-value]
