"""
Logger generator
"""
import logging
import sys
from typing import TextIO

from .const import (
    DEFAULT_FORMAT,
    DEFAULT_FORMAT_DATE,
    DEFAULT_LOG_LEVEL,
    MAP_ENV_LEVEL,
    NO_RUN,
    STDERR_MIN_LEVEL,
)


class LoggerGenerator:
    """Fluent builder: level from ENV, warnings to stderr, progress to stdout"""
    def __init__(self, logger_name: str):
        self.logger_name = logger_name
        self.formatter = logging.Formatter(DEFAULT_FORMAT, datefmt=DEFAULT_FORMAT_DATE)
        self.log_level = DEFAULT_LOG_LEVEL
        self.handlers: list[logging.Handler] = []

    class __StreamSplitFilter(logging.Filter):
        """Pass records on one side of the stderr threshold and fill in the run field"""
        def __init__(self, errors: bool):
            super().__init__()
            self.errors = errors

        def filter(self, rec):
            if not hasattr(rec, "run"):
                rec.run = NO_RUN
            return (rec.levelno >= STDERR_MIN_LEVEL) == self.errors

    def set_level_by_env(self, env: str):
        """

        :param env:
        :return:
        """
        self.log_level = MAP_ENV_LEVEL.get(env.lower(), logging.INFO)
        return self

    def set_level(self, level: str):
        """
        Explicit level name such as "WARNING"; unknown names keep the current level.
        :param level:
        :return:
        """
        resolved = logging.getLevelName(level.upper())
        if isinstance(resolved, int):
            self.log_level = resolved
        return self

    def add_streams(self, out: TextIO = None, err: TextIO = None):
        """
        Progress records to ``out`` (stdout), warnings and errors to ``err`` (stderr).
        :param out:
        :param err:
        :return:
        """
        for stream, errors in ((out or sys.stdout, False), (err or sys.stderr, True)):
            handler = logging.StreamHandler(stream)
            handler.setLevel(self.log_level)
            handler.setFormatter(self.formatter)
            handler.addFilter(self.__StreamSplitFilter(errors))
            self.handlers.append(handler)
        return self

    def get(self) -> logging.Logger:
        if not self.handlers:
            raise ValueError("No stream is set for the logger, please use add_streams")
        logger = logging.getLogger(self.logger_name)
        logger.handlers.clear()  # no duplicate handlers under the same logger_name
        logger.setLevel(self.log_level)
        logger.propagate = False
        for handler in self.handlers:
            logger.addHandler(handler)
        return logger
