"""
Tests for elastolbm.libs.shared.asserts
"""
import pytest

from elastolbm.exceptions import ConfigError
from elastolbm.libs.shared import Assert


@pytest.mark.parametrize("value", [0.5, 2.0])
def test_in_range(value) -> None:
    Assert.require_in_range(value, 0.0, 2.0, "omega")


@pytest.mark.parametrize("value", [0.0, 2.5, -1.0, float("nan"), None])
def test_out_of_range(value) -> None:
    """
    Values outside (0, 2], NaN and None are rejected.
    """
    with pytest.raises(ConfigError):
        Assert.require_in_range(value, 0.0, 2.0, "omega")


def test_include_low() -> None:
    Assert.require_in_range(0.0, 0.0, 1.0, "x", include_low=True)
