"""
Converter class for converting config values.
"""
import re
from fractions import Fraction
from typing import Any, Union

from elastolbm.exceptions.validation_errors import (
    AssignmentError,
    BoolError,
    FloatError,
    IntError,
    PairError,
)
from elastolbm.libs.shared import validator


class Converter:

    @classmethod
    def to_int(cls, value: Union[str, int, float], default: int = None, raise_error: bool = False):
        """
        :param value:
        :param default:
        :param raise_error:
        :return:
        """
        if isinstance(value, int) and not isinstance(value, bool):
            return value
        if validator.is_int(value):
            return int(value)
        if raise_error:
            raise IntError(value)
        return default or value

    @classmethod
    def to_bool(cls, value: Union[str, bool], default: bool = None, raise_error: bool = False):
        """
        :param raise_error:
        :param value:
        :param default:
        :return:
        """
        if isinstance(value, bool):
            return value
        if validator.is_bool(value):
            return value.strip().lower() in ('true', '1', 'yes')
        if raise_error:
            raise BoolError(value)
        if default is not None:
            return default or value
        return False

    @classmethod
    def to_float(cls, value, default: float = None, raise_error: bool = False):
        """
        Accepts plain numbers and fractions such as "1/80".
        :param value:
        :param default:
        :param raise_error:
        :return:
        """
        if validator.is_number(value):
            return float(value)
        if validator.is_fraction(value):
            try:
                return float(Fraction(value.replace(' ', '')))
            except ZeroDivisionError:
                pass
        if raise_error:
            raise FloatError(value)
        return default or value

    @classmethod
    def to_pair(cls, value, separator: str = ',', raise_error: bool = True):
        """
        "1.1,0.4" -> (1.1, 0.4); "1/80,1/200" -> (0.0125, 0.005)
        :param value:
        :param separator:
        :param raise_error:
        :return:
        """
        if isinstance(value, (tuple, list)) and len(value) == 2:
            items = list(value)
        elif isinstance(value, str):
            items = re.split(separator, value.strip())
        else:
            items = []
        if len(items) == 2:
            try:
                return (
                    cls.to_float(items[0], raise_error=True),
                    cls.to_float(items[1], raise_error=True),
                )
            except FloatError:
                pass
        if raise_error:
            raise PairError(value)
        return value

    @classmethod
    def to_assignment(cls, value: str) -> tuple[str, str]:
        """
        "dx=1/80" -> ("dx", "1/80")
        :param value:
        :return:
        """
        if not validator.is_assignment(value):
            raise AssignmentError(value)
        key, raw = value.split('=', 1)
        return key.strip(), raw.strip()

    @classmethod
    def format_value(cls, value: Any):
        if hasattr(value, 'value') and not isinstance(value, (int, float, str)):
            return value.value
        if isinstance(value, bool):
            return str(value).lower()
        if isinstance(value, float):
            return repr(value)
        return value


__all__ = [
    "Converter",
]
