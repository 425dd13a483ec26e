"""
Top level package for elastolbm
"""
from .cli import main

__all__ = [
    "main",
]
