"""
Schemas for the lattice: velocity set and discretization
"""
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from elastolbm.libs.consts.enums import BoundaryMode
from elastolbm.libs.consts.lattice import VELOCITIES

STEP_COUNT_TOLERANCE = 1e-9


class VelocitySet(BaseModel):
    """D2Q4 velocity set with opposite lookup"""
    model_config = ConfigDict(frozen=True)

    indices: tuple[tuple[int, int], ...] = Field(VELOCITIES, description="Ordered lattice velocities (i, j)")

    @model_validator(mode="after")
    def _check_indices(self) -> "VelocitySet":
        if len(self.indices) != 4 or set(self.indices) != set(VELOCITIES):
            raise ValueError(f"velocity set must be a permutation of {VELOCITIES}")
        for i, j in self.indices:
            if i * i + j * j != 1:
                raise ValueError(f"velocity ({i},{j}) is not a unit lattice vector")
        return self

    @computed_field
    @property
    def opposite(self) -> tuple[int, ...]:
        position = {link: k for k, link in enumerate(self.indices)}
        return tuple(position[(-i, -j)] for i, j in self.indices)

    def index_of(self, link: tuple[int, int]) -> int:
        try:
            return self.indices.index(tuple(link))
        except ValueError as exc:
            raise ValueError(f"{link} is not a lattice velocity") from exc


D2Q4 = VelocitySet()


class Discretization(BaseModel):
    """Grid spacing, time step and node layout of one run"""
    model_config = ConfigDict(frozen=True)

    dx: float = Field(..., gt=0.0, description="Dimensionless grid spacing")
    dt: float = Field(..., gt=0.0, description="Dimensionless time step")
    c: float = Field(..., gt=0.0, description="Lattice speed dx/dt")
    nx: int = Field(..., ge=2, description="Nodes along x")
    ny: int = Field(..., ge=2, description="Nodes along y")
    x0: tuple[float, float] = Field((0.0, 0.0), description="Lattice offset")
    extents: tuple[float, float] = Field((1.0, 1.0), description="Domain extents (Lx, Ly)")
    t_final: float = Field(..., gt=0.0, description="Dimensionless end time")
    mode: BoundaryMode = Field(BoundaryMode.PERIODIC, description="Boundary handling")

    @model_validator(mode="after")
    def _check_lattice_speed(self) -> "Discretization":
        recomputed = self.dx / self.dt
        if abs(recomputed - self.c) > 1e-15 * recomputed:
            raise ValueError(f"lattice speed {self.c!r} differs from dx/dt = {recomputed!r}")
        steps = round(self.t_final / self.dt)
        if steps < 1 or abs(steps * self.dt - self.t_final) > STEP_COUNT_TOLERANCE * self.t_final:
            raise ValueError(f"t_final={self.t_final!r} is not a whole number of steps of dt={self.dt!r}")
        return self

    @property
    def n_steps(self) -> int:
        return round(self.t_final / self.dt)

    @property
    def n_nodes(self) -> int:
        return self.nx * self.ny

    def time_at(self, step: int) -> float:
        return step * self.dt

    def half_step_time(self, step: int) -> float:
        """(m + 1/2) dt from the integer step index"""
        return (2 * step + 1) * self.dt / 2.0
