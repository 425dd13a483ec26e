"""
Schemas module
"""
from elastolbm.schemas.lattice import D2Q4, Discretization, VelocitySet
from elastolbm.schemas.material import Material
from elastolbm.schemas.run_config import RunConfig, StudyConfig

__all__ = [
    "D2Q4",
    "Discretization",
    "VelocitySet",
    "Material",
    "RunConfig",
    "StudyConfig",
]
