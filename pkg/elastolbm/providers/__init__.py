"""
Top-level package for providers.
"""
from .mms import CaseSources, ManufacturedCase, ManufacturedSolutionProvider


__all__ = [
    # mms
    "CaseSources",
    "ManufacturedCase",
    "ManufacturedSolutionProvider",
]
