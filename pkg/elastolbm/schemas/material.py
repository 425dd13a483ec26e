"""
Schema for material constants
"""
import math

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Material(BaseModel):
    """
    Isotropic linear elastic material in dimensionless form.
    Wave speeds are stored squared; reference scales default to 1.
    """
    model_config = ConfigDict(frozen=True)

    rho: float = Field(1.0, gt=0.0, description="Density, absorbed by rescaling")
    cK2: float = Field(..., ge=0.0, description="Squared dimensionless dilatational speed")
    cmu2: float = Field(..., ge=0.0, description="Squared dimensionless shear speed")
    L: float = Field(1.0, gt=0.0, description="Reference length")
    T: float = Field(1.0, gt=0.0, description="Reference time")
    V: float = Field(1.0, gt=0.0, description="Reference velocity")

    @model_validator(mode="after")
    def _check_speeds(self) -> "Material":
        if self.cK2 == 0.0 and self.cmu2 == 0.0:
            raise ValueError("cK2 and cmu2 must not both be zero")
        return self

    @property
    def cK(self) -> float:
        return math.sqrt(self.cK2)

    @property
    def cmu(self) -> float:
        return math.sqrt(self.cmu2)

    @property
    def max_speed(self) -> float:
        """sqrt(cK^2 + cmu^2), the speed entering the CFL condition"""
        return math.sqrt(self.cK2 + self.cmu2)

    @property
    def speed_scale(self) -> float:
        return self.L / self.T

    @property
    def dimensional_cK(self) -> float:
        return self.speed_scale * self.cK

    @property
    def dimensional_cmu(self) -> float:
        return self.speed_scale * self.cmu

    @property
    def displacement_scale(self) -> float:
        """u = V T u~"""
        return self.V * self.T

    @property
    def stress_scale(self) -> float:
        """sigma = V (L/T) sigma~"""
        return self.V * self.speed_scale

    def label(self) -> str:
        return f"({self.cK2:g},{self.cmu2:g})"
