"""
Top level handlers package
"""
from .simulation import RunResult, SimulationHandler
from .stability import StabilityHandler, StabilityOutcome
from .verify import VerificationHandler

__all__ = [
    # simulation
    "RunResult",
    "SimulationHandler",
    # stability
    "StabilityHandler",
    "StabilityOutcome",
    # verify
    "VerificationHandler",
]
