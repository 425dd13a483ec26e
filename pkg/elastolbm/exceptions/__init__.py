"""
Top-level package for exceptions.
"""
from .solver import *
from .validation_errors import *


__all__ = [
    # solver
    "SolverBaseException",
    "ConfigError",  # 2
    "LatticeError",  # 2
    "InitialDataError",  # 2
    "CFLRejectedError",  # 3
    "SymmetrizerError",  # 3
    "AlgebraCheckError",  # 3
    "DivergenceError",  # 4
    "ArtifactIOError",  # 5
    # validation
    "ValidationError",
    "IntError",
    "FloatError",
    "BoolError",
    "PairError",
    "AssignmentError",
]
