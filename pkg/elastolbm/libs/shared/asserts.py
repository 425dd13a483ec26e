from elastolbm.exceptions.solver import ConfigError
from elastolbm.libs.shared import validator


class Assert:
    @staticmethod
    def require_in_range(value, low: float, high: float, message: str, include_low: bool = False):
        """
        Raise unless low < value <= high (or low <= value <= high when include_low)
        """
        if not validator.is_number(value):
            raise ConfigError(message)
        above_low = value >= low if include_low else value > low
        if not (above_low and value <= high):
            raise ConfigError(message)
