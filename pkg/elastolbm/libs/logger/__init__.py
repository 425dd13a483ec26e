"""
Top-level package for logger.
"""
from .logger import logger, get_run_logger

__all__ = [
    "logger",
    "get_run_logger",
]
