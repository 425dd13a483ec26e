from .asserts import Assert
from .converter import Converter

__all__ = [
    'Assert',
    'Converter'
]
