"""
Schemas for run, stability and study reports
"""
import math
from typing import Optional

from pydantic import BaseModel, Field, computed_field, field_serializer

from elastolbm.libs.consts.enums import BoundaryMode, CaseName, FieldName, NormName, RunStatus


class CFLResult(BaseModel):
    """CFL gate outcome"""
    passed: bool = Field(..., description="2 sqrt(cK^2 + cmu^2) < c")
    margin: float = Field(..., description="2 sqrt(cK^2 + cmu^2) / c")
    c: float = Field(..., description="Lattice speed")


class AlgebraCheck(BaseModel):
    """One numerical check of the collision algebra"""
    name: str = Field(..., description="Check name")
    value: float = Field(..., description="Measured deviation")
    tolerance: float = Field(..., description="Accepted deviation")

    @computed_field
    @property
    def passed(self) -> bool:
        return math.isfinite(self.value) and self.value <= self.tolerance


class AlgebraReport(BaseModel):
    """Collision algebra checks for one material and lattice speed"""
    cK2: float
    cmu2: float
    c: float
    omega: float
    cfl: CFLResult
    checks: list[AlgebraCheck] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class NormTracePoint(BaseModel):
    """Population norm at one recorded step"""
    step: int
    time: float
    norm: float
    relative_drift: float


class ErrorTracePoint(BaseModel):
    """Space-only relative displacement error at one recorded step"""
    step: int
    time: float
    l2rel_u: float


class FieldErrorNorms(BaseModel):
    """Space-time error norms of one field"""
    L2: float = Field(..., description="(dx^2 dt sum |e|^2)^(1/2)")
    Linf: float = Field(..., description="max |e|_inf")
    L2rel: float = Field(..., description="L2(e) / L2(exact)")
    Linfrel: float = Field(..., description="Linf(e) / L2(exact)")

    def get(self, norm: NormName) -> float:
        return getattr(self, norm.value)

    @classmethod
    def undefined(cls) -> "FieldErrorNorms":
        return cls(L2=math.nan, Linf=math.nan, L2rel=math.nan, Linfrel=math.nan)


class ErrorReport(BaseModel):
    """Error norms of a run against the exact solution"""
    case: CaseName
    mode: BoundaryMode
    cK2: float
    cmu2: float
    dx: float
    dt: float
    nx: int
    ny: int
    steps: int = Field(..., description="Completed time steps")
    slices: int = Field(..., description="Time slices entering the norms")
    error_stride: int = Field(1, description="Steps between sampled slices; dt in the norm is scaled by it")
    status: RunStatus = RunStatus.COMPLETED
    wall_clock: float = Field(0.0, description="Seconds")
    u: FieldErrorNorms
    sigma: FieldErrorNorms

    def field(self, name: FieldName) -> FieldErrorNorms:
        return self.u if name is FieldName.DISPLACEMENT else self.sigma

    @field_serializer("case", "mode", "status")
    def serialize_enum(self, value, _info) -> str:
        """

        :param value:
        :param _info:
        :return:
        """
        return value.value


class OrderRow(BaseModel):
    """One row of the convergence order table"""
    case: str
    mode: str
    cK2: float
    cmu2: float
    dx: float
    dt: float
    field: str
    norm: str
    error: float
    observed_order: Optional[float] = Field(None, description="Order against the next coarser level")


class ThresholdFailure(BaseModel):
    """A required convergence order that was not reached"""
    cK2: float
    cmu2: float
    field: str
    norm: str
    observed_order: Optional[float]
    required: float


class StudySummary(BaseModel):
    """Pass/fail summary of a convergence study"""
    case: CaseName
    mode: BoundaryMode
    rows: list[OrderRow] = Field(default_factory=list)
    failures: list[ThresholdFailure] = Field(default_factory=list)
    diverged: list[str] = Field(default_factory=list, description="Labels of diverged runs")

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.failures and not self.diverged

    @field_serializer("case", "mode")
    def serialize_enum(self, value, _info) -> str:
        return value.value


class NormAgreement(BaseModel):
    """Comparison of two norm traces on nested lattices"""
    shared_points: int
    max_relative_difference: float
    tolerance: float = 0.05

    @computed_field
    @property
    def passed(self) -> bool:
        return self.shared_points > 0 and self.max_relative_difference <= self.tolerance
