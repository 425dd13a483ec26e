"""
decorator for timing functions
"""
import inspect
import time
from functools import wraps
from typing import Callable

from elastolbm.libs.logger import logger


def timer(func: Callable) -> Callable:
    """
    decorator for timing functions; wall clock is measured with perf_counter
    :param func:
    :return:
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        try:
            return func(*args, **kwargs)
        finally:
            logger.info(f"Function {func.__qualname__} executed in {time.perf_counter() - start_time:.4f} seconds.")

    @wraps(func)
    async def async_wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        try:
            return await func(*args, **kwargs)
        finally:
            logger.info(f"Function {func.__qualname__} executed in {time.perf_counter() - start_time:.4f} seconds.")

    return async_wrapper if inspect.iscoroutinefunction(func) else wrapper
