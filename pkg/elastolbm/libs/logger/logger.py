"""
Logger
"""
import logging
from typing import Optional

from elastolbm.config import settings
from .generator import LoggerGenerator


__all__ = [
    "logger",
    "get_run_logger",
]


def get_logger(app_name: str, env: str, level: Optional[str] = None) -> logging.Logger:
    """
    Build the application logger; an explicit level wins over the env mapping.
    :param app_name:
    :param env:
    :param level:
    :return:
    """
    generator = LoggerGenerator(app_name).set_level_by_env(env)
    if level:
        generator.set_level(level)
    return generator.add_streams().get()


def get_run_logger(run_name: str) -> logging.LoggerAdapter:
    """
    Application logger whose records carry the run name in the run field.
    :param run_name:
    :return:
    """
    return logging.LoggerAdapter(logger, {"run": run_name})


logger = get_logger(settings.APP_NAME, settings.ENV, settings.LOG_LEVEL)
