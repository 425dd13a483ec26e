"""
Second-order consistent initialization of the populations.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from elastolbm.exceptions import InitialDataError
from elastolbm.libs.consts.lattice import N_COMPONENTS
from elastolbm.schemas.lattice import D2Q4, VelocitySet
from elastolbm.schemas.material import Material
from elastolbm.solver.kernel import equilibria
from elastolbm.solver.model import flux_x, flux_y

__all__ = [
    "InitialData",
    "equilibrium_part",
    "correction_part",
    "init_populations",
]


@dataclass(frozen=True, eq=False)
class InitialData:
    """
    Dimensionless data at t = 0, every array shaped (5, ny, nx).

    `state` is U0 built from v0 and the gradient of u0; `grad_x` and `grad_y`
    are its spatial derivatives; `load` is B at t = 0 or None when it vanishes.
    """
    state: Optional[np.ndarray]
    grad_x: Optional[np.ndarray]
    grad_y: Optional[np.ndarray]
    load: Optional[np.ndarray] = None

    def validate(self) -> "InitialData":
        for name in ("state", "grad_x", "grad_y"):
            value = getattr(self, name)
            if value is None:
                raise InitialDataError(f"initial data is missing `{name}`")
            if value.shape[0] != N_COMPONENTS:
                raise InitialDataError(f"`{name}` must have {N_COMPONENTS} components, got shape {value.shape}")
        shape = self.state.shape
        for name in ("grad_x", "grad_y", "load"):
            value = getattr(self, name)
            if value is not None and value.shape != shape:
                raise InitialDataError(f"`{name}` has shape {value.shape}, expected {shape}")
        return self


def equilibrium_part(data: InitialData, c: float, material: Material, velocities: VelocitySet = D2Q4) -> np.ndarray:
    """Leading-order populations: the equilibria of U0"""
    return equilibria(data.state, c, material, velocities)


def correction_part(data: InitialData, c: float, material: Material, velocities: VelocitySet = D2Q4) -> np.ndarray:
    """
    The bracket multiplied by -dt/8 in the initialization, shape (4, 5, ...).

    Nested fluxes are applied one after another.
    """
    dux, duy = data.grad_x, data.grad_y
    phi_x_dux = flux_x(dux, material)
    phi_y_duy = flux_y(duy, material)
    phi_xx = flux_x(phi_x_dux, material)
    phi_yx = flux_y(phi_x_dux, material)
    phi_xy = flux_x(phi_y_duy, material)
    phi_yy = flux_y(phi_y_duy, material)

    if data.load is None:
        load = np.zeros_like(data.state)
    else:
        load = data.load
    phi_x_load = flux_x(load, material)
    phi_y_load = flux_y(load, material)

    terms = []
    for i, j in velocities.indices:
        load_term = load + (2.0 / c) * (i * phi_x_load + j * phi_y_load)
        x_term = c * (
            i * dux
            + ((2 * i * i - 1) / c) * phi_x_dux
            - (2.0 / (c * c)) * (i * phi_xx + j * phi_yx)
        )
        y_term = c * (
            j * duy
            + ((2 * j * j - 1) / c) * phi_y_duy
            - (2.0 / (c * c)) * (i * phi_xy + j * phi_yy)
        )
        terms.append(load_term + x_term + y_term)
    return np.stack(terms)


def init_populations(
    data: InitialData,
    c: float,
    dt: float,
    material: Material,
    velocities: VelocitySet = D2Q4,
) -> np.ndarray:
    """
    f_ij(x, 0) = f_eq(U0) - dt/8 {correction}.
    :param data: U0, its gradients and the load at t = 0
    :param c: lattice speed
    :param dt:
    :param material:
    :param velocities:
    :return: populations (4, 5, ny, nx)
    """
    data.validate()
    return equilibrium_part(data, c, material, velocities) - (dt / 8.0) * correction_part(data, c, material, velocities)
