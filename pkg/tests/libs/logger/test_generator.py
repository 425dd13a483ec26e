"""
Tests for elastolbm.libs.logger
"""
import io
import logging

import pytest

from elastolbm.libs.logger.generator import LoggerGenerator


def _build(name: str, level: str = "dev") -> tuple[logging.Logger, io.StringIO, io.StringIO]:
    out, err = io.StringIO(), io.StringIO()
    logger = LoggerGenerator(name).set_level_by_env(level).add_streams(out=out, err=err).get()
    return logger, out, err


@pytest.mark.parametrize("env, level", [("dev", logging.DEBUG), ("PROD", logging.INFO), ("other", logging.INFO)])
def test_level_by_env(env, level) -> None:
    assert LoggerGenerator("elastolbm.test.env").set_level_by_env(env).log_level == level


def test_explicit_level_overrides_env() -> None:
    generator = LoggerGenerator("elastolbm.test.level").set_level_by_env("dev").set_level("warning")
    assert generator.log_level == logging.WARNING
    assert generator.set_level("loud").log_level == logging.WARNING


def test_streams_are_split_by_severity() -> None:
    """
    Info goes to the progress stream, warnings to the error stream.
    """
    logger, out, err = _build("elastolbm.test.split")
    logger.info("step 10")
    logger.warning("cfl override")
    assert "step 10" in out.getvalue() and "step 10" not in err.getvalue()
    assert "cfl override" in err.getvalue() and "cfl override" not in out.getvalue()


def test_run_field() -> None:
    """
    Records from a run adapter carry the run name, others a placeholder.
    """
    logger, out, _ = _build("elastolbm.test.run")
    logger.info("outside")
    logging.LoggerAdapter(logger, {"run": "wave52_periodic"}).info("inside")
    first, second = out.getvalue().splitlines()
    assert "[-] outside" in first
    assert "[wave52_periodic] inside" in second


def test_get_without_streams() -> None:
    with pytest.raises(ValueError):
        LoggerGenerator("elastolbm.test.none").get()


def test_rebuild_does_not_duplicate_handlers() -> None:
    _build("elastolbm.test.rebuild")
    logger, _, _ = _build("elastolbm.test.rebuild")
    assert len(logger.handlers) == 2
