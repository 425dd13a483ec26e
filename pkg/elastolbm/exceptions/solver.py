"""
Exceptions raised by the solver, the harness and the CLI
"""
from typing import Any, Optional

from elastolbm.libs.consts.enums import ExitCode


class SolverBaseException(Exception):
    """Solver Base Exception"""
    exit_code: ExitCode = ExitCode.CONFIG_ERROR

    def __init__(
        self,
        detail: Optional[str] = None,
        **kwargs: Any
    ):
        super().__init__(detail)
        self.detail = detail
        self.debug_detail = kwargs.pop('debug_detail', None)

    def __str__(self):
        return self.detail or ""


class ConfigError(SolverBaseException):
    """
    Config Error
    exit_code: 2
    """
    exit_code = ExitCode.CONFIG_ERROR


class LatticeError(ConfigError):
    """Lattice cannot be built from the requested extents and spacing"""


class InitialDataError(ConfigError):
    """Initial data is incomplete"""


class CFLRejectedError(SolverBaseException):
    """
    CFL Rejected Error
    exit_code: 3
    """
    exit_code = ExitCode.CFL_REJECTED

    def __init__(self, margin: float, **kwargs: Any):
        super().__init__(
            detail=f"CFL condition violated: margin {margin:.6g} >= 1 (use cfl_override to run anyway)",
            **kwargs
        )
        self.margin = margin


class SymmetrizerError(SolverBaseException):
    """
    Symmetrizer Error
    exit_code: 3
    """
    exit_code = ExitCode.CFL_REJECTED


class AlgebraCheckError(SolverBaseException):
    """
    Algebra Check Error
    exit_code: 3
    """
    exit_code = ExitCode.CFL_REJECTED


class DivergenceError(SolverBaseException):
    """
    Divergence Error
    exit_code: 4
    """
    exit_code = ExitCode.DIVERGENCE

    def __init__(self, step: int, detail: Optional[str] = None, **kwargs: Any):
        super().__init__(detail=detail or f"Run diverged at step {step}", **kwargs)
        self.step = step


class ArtifactIOError(SolverBaseException):
    """
    Artifact IO Error
    exit_code: 5
    """
    exit_code = ExitCode.IO_ERROR
