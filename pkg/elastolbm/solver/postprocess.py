"""
Displacement and stress reconstruction, snapshot tables
"""
from dataclasses import dataclass

import numpy as np
import pandas as pd

from elastolbm.libs.consts.lattice import SNAPSHOT_COLUMNS
from elastolbm.schemas.material import Material
from elastolbm.solver.grid import Lattice
from elastolbm.solver.model import stress_from_state

__all__ = [
    "DerivedFields",
    "update_displacement",
    "advance_accumulator",
    "prime_accumulator",
    "derive_fields",
    "snapshot",
]


@dataclass(frozen=True, eq=False)
class DerivedFields:
    """
    Dimensional fields at one recorded time; arrays are (components, ny, nx).
    """
    step: int
    time: float
    u: np.ndarray
    v: np.ndarray
    sigma: np.ndarray

    def is_finite(self) -> bool:
        return bool(np.isfinite(self.u).all() and np.isfinite(self.v).all() and np.isfinite(self.sigma).all())


def update_displacement(u_star: np.ndarray, v: np.ndarray, dt: float) -> np.ndarray:
    """u_num(t) = u*(t - dt) + dt/2 v(t)"""
    return u_star + (0.5 * dt) * v


def advance_accumulator(u: np.ndarray, v: np.ndarray, dt: float) -> np.ndarray:
    """u* = u_num + dt/2 v with the velocity of the same collision"""
    return u + (0.5 * dt) * v


def prime_accumulator(u0: np.ndarray, v0: np.ndarray, dt: float) -> np.ndarray:
    """Accumulator before the first stage, chosen so that u_num(0) = u0"""
    return u0 - (0.5 * dt) * v0


def derive_fields(
    state: np.ndarray,
    u_star: np.ndarray,
    material: Material,
    dt: float,
    step: int,
    time: float,
) -> DerivedFields:
    """
    Velocity, trapezoidal displacement and stress from the moment field.
    :param state: U_num, shape (5, ny, nx)
    :param u_star: accumulator, shape (2, ny, nx)
    :param material:
    :param dt: dimensionless time step; the displacement update uses T dt
    :param step:
    :param time:
    :return:
    """
    v = material.V * state[:2]
    return DerivedFields(
        step=step,
        time=time,
        u=update_displacement(u_star, v, material.T * dt),
        v=v,
        sigma=stress_from_state(state, material),
    )


def snapshot(fields: DerivedFields, lattice: Lattice, material: Material) -> pd.DataFrame:
    """
    Per-node table (x, y, u_x, u_y, v_x, v_y, sxx, syy, sxy) in row-major order.
    """
    X, Y = lattice.mesh
    columns = (
        material.L * X,
        material.L * Y,
        fields.u[0], fields.u[1],
        fields.v[0], fields.v[1],
        fields.sigma[0], fields.sigma[1], fields.sigma[2],
    )
    return pd.DataFrame({name: np.ravel(values) for name, values in zip(SNAPSHOT_COLUMNS, columns)})
