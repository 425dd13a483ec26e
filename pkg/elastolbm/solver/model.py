"""
State and flux structure of the first-order elastodynamic system.

State vectors are arrays whose leading axis holds the five components
(v_x, v_y, j_s, j_d, j_xy); any trailing node axes broadcast through.
"""
from dataclasses import dataclass

import numpy as np

from elastolbm.schemas.material import Material

__all__ = [
    "FluxMatrices",
    "flux_matrices",
    "flux_x",
    "flux_y",
    "stress_from_state",
    "dirichlet_source",
    "boundary_operator",
    "boundary_source",
]


@dataclass(frozen=True, eq=False)
class FluxMatrices:
    ax: np.ndarray
    ay: np.ndarray


def flux_matrices(material: Material) -> FluxMatrices:
    """Dense symmetric Ax, Ay with flux_x(U) = Ax U and flux_y(U) = Ay U"""
    ck, cm = material.cK, material.cmu
    ax = np.array([
        [0.0, 0.0, ck, cm, 0.0],
        [0.0, 0.0, 0.0, 0.0, cm],
        [ck, 0.0, 0.0, 0.0, 0.0],
        [cm, 0.0, 0.0, 0.0, 0.0],
        [0.0, cm, 0.0, 0.0, 0.0],
    ])
    ay = np.array([
        [0.0, 0.0, 0.0, 0.0, cm],
        [0.0, 0.0, ck, -cm, 0.0],
        [0.0, ck, 0.0, 0.0, 0.0],
        [0.0, -cm, 0.0, 0.0, 0.0],
        [cm, 0.0, 0.0, 0.0, 0.0],
    ])
    return FluxMatrices(ax=ax, ay=ay)


def flux_x(state: np.ndarray, material: Material) -> np.ndarray:
    v_x, v_y, j_s, j_d, j_xy = state
    ck, cm = material.cK, material.cmu
    return np.stack((ck * j_s + cm * j_d, cm * j_xy, ck * v_x, cm * v_x, cm * v_y))


def flux_y(state: np.ndarray, material: Material) -> np.ndarray:
    v_x, v_y, j_s, j_d, j_xy = state
    ck, cm = material.cK, material.cmu
    return np.stack((cm * j_xy, ck * j_s - cm * j_d, ck * v_y, -cm * v_y, cm * v_x))


def stress_from_state(state: np.ndarray, material: Material) -> np.ndarray:
    """
    (sigma_xx, sigma_yy, sigma_xy) with dimensional speeds and velocity scale
    """
    _, _, j_s, j_d, j_xy = state
    ck, cm = material.dimensional_cK, material.dimensional_cmu
    scale = -material.V
    return np.stack((
        scale * (ck * j_s + cm * j_d),
        scale * (ck * j_s - cm * j_d),
        scale * (cm * j_xy),
    ))


def dirichlet_source(link: tuple[int, int], du_dt: np.ndarray, material: Material) -> np.ndarray:
    """
    Wall source for the missing population along `link`, given the rate of the
    prescribed displacement at the crossing point.
    :param link: (i, j)
    :param du_dt: array of shape (2, ...)
    :param material:
    :return: array of shape (5, ...)
    """
    i, j = link
    du_x, du_y = du_dt
    ck, cm = material.cK, material.cmu
    return np.stack((
        0.5 * du_x,
        0.5 * du_y,
        i * ck * du_x + j * ck * du_y,
        i * cm * du_x - j * cm * du_y,
        j * cm * du_x + i * cm * du_y,
    ))


def boundary_operator(state: np.ndarray, normal: tuple[int, int], material: Material) -> np.ndarray:
    """
    Mixed boundary operator: velocity rows of U and the flux rows along the outer normal.
    """
    n_x, n_y = normal
    flux = n_x * flux_x(state, material) + n_y * flux_y(state, material)
    return np.concatenate((state[:2], flux[2:]))


def boundary_source(normal: tuple[int, int], du_dt: np.ndarray, material: Material) -> np.ndarray:
    """
    Right-hand side of the mixed boundary condition for a prescribed displacement rate.
    """
    n_x, n_y = normal
    du_x, du_y = du_dt
    ck, cm = material.cK, material.cmu
    return np.stack((
        du_x,
        du_y,
        ck * (n_x * du_x + n_y * du_y),
        cm * (n_x * du_x - n_y * du_y),
        cm * (n_y * du_x + n_x * du_y),
    ))
