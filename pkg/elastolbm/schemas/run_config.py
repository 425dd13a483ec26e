"""
Schemas for run and study parameters
"""
from typing import Any, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from elastolbm.exceptions import ConfigError
from elastolbm.exceptions.validation_errors import ValidationError as ConversionError
from elastolbm.libs.consts.enums import BoundaryMode, CaseName
from elastolbm.libs.shared import Converter
from elastolbm.schemas.material import Material

# keys written to a manifest that are not run parameters
MANIFEST_ONLY_KEYS = ("code_version", "command")

# separator between items of list-valued keys, e.g. "1.1,0.4;0.75,0.75"
ITEM_SEPARATOR = ";"


def merge_layers(*layers: Optional[Mapping[str, Any]]) -> dict[str, Any]:
    """
    Later layers override earlier ones; None values never override.
    """
    merged: dict[str, Any] = {}
    for layer in layers:
        if not layer:
            continue
        for key, value in layer.items():
            if value is None or key in MANIFEST_ONLY_KEYS:
                continue
            merged[key.strip()] = value
    return merged


def _to_float(value):
    if isinstance(value, str):
        return Converter.to_float(value, raise_error=True)
    return value


def _to_pairs(value):
    if isinstance(value, str):
        items = [item for item in value.split(ITEM_SEPARATOR) if item.strip()]
        return [Converter.to_pair(item) for item in items]
    if isinstance(value, (list, tuple)):
        return [Converter.to_pair(item) for item in value]
    return value


class RunConfig(BaseModel):
    """Parameters of a single run"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: Optional[str] = Field(None, description="Run directory name; derived from the parameters when empty")
    case: CaseName = Field(CaseName.WAVE52, description="Manufactured case")
    mode: BoundaryMode = Field(BoundaryMode.PERIODIC, description="Boundary handling")
    cK2: float = Field(..., ge=0.0, description="Squared dimensionless dilatational speed")
    cmu2: float = Field(..., ge=0.0, description="Squared dimensionless shear speed")
    dx: float = Field(..., gt=0.0, description="Grid spacing")
    dt: float = Field(..., gt=0.0, description="Time step")
    t_final: float = Field(..., gt=0.0, description="End time")
    lx: float = Field(1.0, gt=0.0, description="Domain extent along x")
    ly: float = Field(1.0, gt=0.0, description="Domain extent along y")
    L: float = Field(1.0, gt=0.0, description="Reference length")
    T: float = Field(1.0, gt=0.0, description="Reference time")
    V: float = Field(1.0, gt=0.0, description="Reference velocity")
    omega: float = Field(2.0, description="Relaxation parameter in (0, 2]")
    cfl_override: bool = Field(False, description="Run even when the CFL condition fails")
    snapshot_stride: int = Field(0, ge=0, description="Steps between field snapshots; 0 writes the final one only")
    norm_stride: int = Field(1, ge=1, description="Steps between norm trace points")
    error_stride: int = Field(1, ge=1, description="Steps between sampled error slices")
    cut_row: Optional[int] = Field(None, ge=0, description="Lattice row of the horizontal cut; nearest y = 0.5 when empty")
    output_dir: Optional[str] = Field(None, description="Parent directory of the run directory")

    @field_validator("cK2", "cmu2", "dx", "dt", "t_final", "lx", "ly", "L", "T", "V", "omega", mode="before")
    @classmethod
    def _parse_fraction(cls, value):
        return _to_float(value)

    @field_validator("cfl_override", mode="before")
    @classmethod
    def _parse_bool(cls, value):
        return Converter.to_bool(value, raise_error=True)

    @field_validator("name", "output_dir", "cut_row", mode="before")
    @classmethod
    def _empty_is_none(cls, value):
        if isinstance(value, str) and not value.strip():
            return None
        return value

    @model_validator(mode="after")
    def _check_parameters(self) -> "RunConfig":
        if not 0.0 < self.omega <= 2.0:
            raise ValueError(f"omega must lie in (0, 2], got {self.omega!r}")
        if self.cK2 == 0.0 and self.cmu2 == 0.0:
            raise ValueError("cK2 and cmu2 must not both be zero")
        return self

    @property
    def material(self) -> Material:
        return Material(cK2=self.cK2, cmu2=self.cmu2, L=self.L, T=self.T, V=self.V)

    @property
    def extents(self) -> tuple[float, float]:
        return self.lx, self.ly

    @property
    def c(self) -> float:
        return self.dx / self.dt

    @property
    def run_name(self) -> str:
        if self.name:
            return self.name
        return (
            f"{self.case.value}_{self.mode.value}"
            f"_cK2-{self.cK2:g}_cmu2-{self.cmu2:g}_dx-{self.dx:.6g}_dt-{self.dt:.6g}"
        )

    def to_flat(self) -> dict[str, str]:
        """Every parameter as a string, in declaration order"""
        return {
            key: str(Converter.format_value(value))
            for key, value in self.model_dump().items()
            if value is not None
        }

    @classmethod
    def from_layers(cls, *layers: Optional[Mapping[str, Any]]) -> "RunConfig":
        """
        Build from preset, config file, --set pairs and options, in that order.
        Raises ConfigError on unknown keys and invalid values.
        """
        merged = merge_layers(*layers)
        try:
            return cls.model_validate(merged)
        except (ValueError, ConversionError) as exc:
            raise ConfigError(f"invalid run configuration: {exc}", debug_detail=exc) from exc


class StudyConfig(BaseModel):
    """Materials and refinement levels of a convergence study"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: Optional[str] = Field(None, description="Study directory name")
    case: CaseName = Field(CaseName.WAVE52, description="Manufactured case")
    mode: BoundaryMode = Field(BoundaryMode.PERIODIC, description="Boundary handling")
    materials: list[tuple[float, float]] = Field(..., description="(cK2, cmu2) pairs")
    discretizations: list[tuple[float, float]] = Field(..., description="(dx, dt) pairs, coarse to fine")
    t_final: float = Field(1.0, gt=0.0, description="End time")
    omega: float = Field(2.0, description="Relaxation parameter in (0, 2]")
    error_stride: int = Field(1, ge=1, description="Steps between sampled error slices")
    output_dir: Optional[str] = Field(None, description="Parent directory of the study directory")

    @field_validator("t_final", "omega", mode="before")
    @classmethod
    def _parse_fraction(cls, value):
        return _to_float(value)

    @field_validator("materials", "discretizations", mode="before")
    @classmethod
    def _parse_pairs(cls, value):
        return _to_pairs(value)

    @model_validator(mode="after")
    def _check_lists(self) -> "StudyConfig":
        if not self.materials:
            raise ValueError("material list is empty")
        if not self.discretizations:
            raise ValueError("discretization list is empty")
        if not 0.0 < self.omega <= 2.0:
            raise ValueError(f"omega must lie in (0, 2], got {self.omega!r}")
        speeds = [dx / dt for dx, dt in self.discretizations]
        if any(abs(speed - speeds[0]) > 1e-12 * speeds[0] for speed in speeds):
            raise ValueError(f"discretizations must share one lattice speed dx/dt, got {speeds}")
        return self

    @property
    def study_name(self) -> str:
        return self.name or f"converge_{self.case.value}_{self.mode.value}"

    def levels(self) -> list[tuple[float, float]]:
        """Discretizations ordered coarse to fine"""
        return sorted(self.discretizations, key=lambda pair: pair[0], reverse=True)

    def run_configs(self) -> list[RunConfig]:
        """One RunConfig per (material, level), materials outermost"""
        return [
            RunConfig(
                name=f"{self.study_name}_cK2-{cK2:g}_cmu2-{cmu2:g}_dx-{dx:.6g}",
                case=self.case,
                mode=self.mode,
                cK2=cK2,
                cmu2=cmu2,
                dx=dx,
                dt=dt,
                t_final=self.t_final,
                omega=self.omega,
                error_stride=self.error_stride,
                output_dir=self.output_dir,
            )
            for cK2, cmu2 in self.materials
            for dx, dt in self.levels()
        ]

    @classmethod
    def from_layers(cls, *layers: Optional[Mapping[str, Any]]) -> "StudyConfig":
        merged = merge_layers(*layers)
        try:
            return cls.model_validate(merged)
        except (ValueError, ConversionError) as exc:
            raise ConfigError(f"invalid study configuration: {exc}", debug_detail=exc) from exc
