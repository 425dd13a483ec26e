"""
Enums for the application
"""
from enum import Enum, IntEnum


class BoundaryMode(Enum):
    """
    Boundary handling of the rectangular domain
    """
    PERIODIC = "periodic"
    DIRICHLET = "dirichlet"


class CaseName(Enum):
    """
    Manufactured case selectable by name
    """
    WAVE52 = "wave52"
    STABILITY_IC = "stability_ic"


class FieldName(Enum):
    """
    Solution field compared against the exact solution
    """
    DISPLACEMENT = "u"
    STRESS = "sigma"


class NormName(Enum):
    """
    Space-time error norm
    """
    L2 = "L2"
    LINF = "Linf"
    L2_REL = "L2rel"
    LINF_REL = "Linfrel"


class RunStatus(Enum):
    """
    Terminal status of a run
    """
    COMPLETED = "completed"
    UNSTABLE = "unstable"


class ExitCode(IntEnum):
    """
    Process exit code of the CLI
    """
    OK = 0
    THRESHOLD_MISSED = 1
    CONFIG_ERROR = 2
    CFL_REJECTED = 3
    DIVERGENCE = 4
    IO_ERROR = 5
