"""
Tests for elastolbm.libs.decorators.timer
"""
import pytest
from pytest_mock import MockerFixture

from elastolbm.libs.decorators.timer import timer


def test_timer_logs_sync_calls(mocker: MockerFixture) -> None:
    info = mocker.patch("elastolbm.libs.decorators.timer.logger.info")

    @timer
    def integrate(steps: int) -> int:
        return steps * 2

    assert integrate(5) == 10
    info.assert_called_once()
    assert "integrate" in info.call_args.args[0]


def test_timer_logs_on_failure(mocker: MockerFixture) -> None:
    """
    Wall clock is logged even when the wrapped call raises.
    """
    info = mocker.patch("elastolbm.libs.decorators.timer.logger.info")

    @timer
    def diverge():
        raise RuntimeError("norm blew up")

    with pytest.raises(RuntimeError):
        diverge()
    info.assert_called_once()


@pytest.mark.asyncio
async def test_timer_logs_async_calls(mocker: MockerFixture) -> None:
    info = mocker.patch("elastolbm.libs.decorators.timer.logger.info")

    @timer
    async def study() -> str:
        return "done"

    assert await study() == "done"
    info.assert_called_once()
