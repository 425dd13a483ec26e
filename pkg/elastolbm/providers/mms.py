"""
Manufactured solutions: exact fields, body load, initial and wall data.

Evaluators take dimensionless coordinates. Functions returning kernel inputs
(state, load, wall rate, initial data) stay dimensionless; `exact_displacement`
and `exact_stress` are scaled like the solver's derived fields.
"""
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from elastolbm.exceptions import ConfigError
from elastolbm.libs.consts.enums import CaseName
from elastolbm.providers.harmonic import HarmonicField, cos_factor, sin_factor
from elastolbm.schemas.material import Material
from elastolbm.solver.initcond import InitialData
from elastolbm.solver.model import flux_x, flux_y

__all__ = [
    "ManufacturedCase",
    "case_wave52",
    "case_stability_ic",
    "get_case",
    "displacement",
    "displacement_gradient",
    "exact_state",
    "state_gradient",
    "exact_displacement",
    "exact_velocity",
    "exact_stress",
    "body_load",
    "dirichlet_rate",
    "initial_data",
    "initial_displacement",
    "CaseSources",
    "central_difference",
    "pde_residual",
    "ManufacturedSolutionProvider",
]

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi


@dataclass(frozen=True)
class ManufacturedCase:
    """
    Closed-form displacement u(x, y, t) and the data it generates.

    `exact` marks cases whose displacement solves the forced problem, so that
    error norms make sense. `forced` switches the derived body load on.
    `wall_data` takes the wall displacement from u; otherwise walls are fixed.
    `initial_time` is where the initial data is read off.
    """
    name: CaseName
    u_x: HarmonicField
    u_y: HarmonicField
    exact: bool = True
    forced: bool = True
    wall_data: bool = True
    initial_time: float = 0.0

    def component(self, index: int) -> HarmonicField:
        return self.u_x if index == 0 else self.u_y


def case_wave52() -> ManufacturedCase:
    """Periodic travelling wave with nonzero load and inhomogeneous walls"""
    u_x = HarmonicField.product(
        sin_factor(FOUR_PI, (1.0, 0.0, -0.3)),
        cos_factor(TWO_PI, (0.0, 1.0, -0.8)),
        sin_factor(FOUR_PI, (0.0, 0.0, 1.0), phase=-0.1),
    )
    u_y = HarmonicField.product(
        cos_factor(FOUR_PI, (1.0, 0.0, -0.7)),
        sin_factor(TWO_PI, (0.0, 1.0, -0.1)),
        cos_factor(FOUR_PI, (0.0, 0.0, 1.0), phase=0.4),
    )
    return ManufacturedCase(name=CaseName.WAVE52, u_x=u_x, u_y=u_y)


def case_stability_ic() -> ManufacturedCase:
    """Initial data only, vanishing on the walls of the unit square; no load, fixed walls"""
    u_x = HarmonicField.product(
        sin_factor(FOUR_PI, (1.0, 0.0, 0.0)),
        sin_factor(TWO_PI, (0.0, 1.0, 0.0)),
        sin_factor(FOUR_PI, (0.0, 0.0, 1.0), phase=-0.1),
    )
    u_y = HarmonicField.product(
        sin_factor(FOUR_PI, (1.0, 0.0, 0.0)),
        sin_factor(TWO_PI, (0.0, 1.0, 0.0)),
        sin_factor(FOUR_PI, (0.0, 0.0, 1.0), phase=0.4),
    )
    return ManufacturedCase(
        name=CaseName.STABILITY_IC,
        u_x=u_x,
        u_y=u_y,
        exact=False,
        forced=False,
        wall_data=False,
        initial_time=0.0,
    )


_CASES: dict[CaseName, Callable[[], ManufacturedCase]] = {
    CaseName.WAVE52: case_wave52,
    CaseName.STABILITY_IC: case_stability_ic,
}


def get_case(name: CaseName | str) -> ManufacturedCase:
    try:
        return _CASES[CaseName(name)]()
    except ValueError as exc:
        raise ConfigError(f"unknown case {name!r}, expected one of {[case.value for case in CaseName]}") from exc


def displacement(case: ManufacturedCase, x, y, t, *axes: str) -> np.ndarray:
    """Dimensionless (u_x, u_y) or one of its partial derivatives, shape (2, ...)"""
    return np.stack((case.u_x.derivative(*axes)(x, y, t), case.u_y.derivative(*axes)(x, y, t)))


def displacement_gradient(case: ManufacturedCase, x, y, t, *axes: str) -> tuple[np.ndarray, ...]:
    """(du_x/dx, du_x/dy, du_y/dx, du_y/dy), optionally differentiated further along `axes`"""
    return (
        case.u_x.derivative("x", *axes)(x, y, t),
        case.u_x.derivative("y", *axes)(x, y, t),
        case.u_y.derivative("x", *axes)(x, y, t),
        case.u_y.derivative("y", *axes)(x, y, t),
    )


def _state(case: ManufacturedCase, x, y, t, material: Material, *axes: str) -> np.ndarray:
    ck, cm = material.cK, material.cmu
    v_x = case.u_x.derivative("t", *axes)(x, y, t)
    v_y = case.u_y.derivative("t", *axes)(x, y, t)
    uxx, uxy, uyx, uyy = displacement_gradient(case, x, y, t, *axes)
    return np.stack((
        v_x,
        v_y,
        -ck * (uxx + uyy),
        -cm * (uxx - uyy),
        -cm * (uyx + uxy),
    ))


def exact_state(case: ManufacturedCase, x, y, t, material: Material) -> np.ndarray:
    """
    Dimensionless state (v_x, v_y, j_s, j_d, j_xy) of the manufactured displacement.
    :return: array of shape (5, ...)
    """
    return _state(case, x, y, t, material)


def state_gradient(case: ManufacturedCase, x, y, t, material: Material, axis: str) -> np.ndarray:
    """Exact d/dx or d/dy of the state"""
    return _state(case, x, y, t, material, axis)


def exact_displacement(case: ManufacturedCase, x, y, t, material: Material) -> np.ndarray:
    return material.displacement_scale * displacement(case, x, y, t)


def exact_velocity(case: ManufacturedCase, x, y, t, material: Material) -> np.ndarray:
    return material.V * displacement(case, x, y, t, "t")


def exact_stress(case: ManufacturedCase, x, y, t, material: Material) -> np.ndarray:
    """(sigma_xx, sigma_yy, sigma_xy) of the material law, scaled to physical units"""
    uxx, uxy, uyx, uyy = displacement_gradient(case, x, y, t)
    normal = material.cK2 + material.cmu2
    cross = material.cK2 - material.cmu2
    return material.stress_scale * np.stack((
        normal * uxx + cross * uyy,
        cross * uxx + normal * uyy,
        material.cmu2 * (uxy + uyx),
    ))


def body_load(case: ManufacturedCase, x, y, t, material: Material) -> Optional[np.ndarray]:
    """
    b = d2u/dt2 - div sigma(u), shape (2, ...); None for unforced cases.
    """
    if not case.forced:
        return None
    normal = material.cK2 + material.cmu2
    ux, uy = case.u_x, case.u_y
    b_x = ux.derivative("t", "t")(x, y, t) - (
        normal * ux.derivative("x", "x")(x, y, t)
        + material.cK2 * uy.derivative("x", "y")(x, y, t)
        + material.cmu2 * ux.derivative("y", "y")(x, y, t)
    )
    b_y = uy.derivative("t", "t")(x, y, t) - (
        material.cmu2 * uy.derivative("x", "x")(x, y, t)
        + material.cK2 * ux.derivative("x", "y")(x, y, t)
        + normal * uy.derivative("y", "y")(x, y, t)
    )
    return np.stack((b_x, b_y))


def dirichlet_rate(case: ManufacturedCase, x, y, t) -> np.ndarray:
    """Time derivative of the wall displacement, shape (2, ...)"""
    if not case.wall_data:
        return np.zeros((2,) + np.broadcast_shapes(np.shape(x), np.shape(y), np.shape(t)))
    return displacement(case, x, y, t, "t")


def _full_load(case: ManufacturedCase, x, y, t, material: Material) -> Optional[np.ndarray]:
    body = body_load(case, x, y, t, material)
    if body is None:
        return None
    load = np.zeros((5,) + body.shape[1:])
    load[:2] = body
    return load


def initial_data(case: ManufacturedCase, x, y, material: Material) -> InitialData:
    """U0, its gradients and B at the initial time on the node mesh"""
    t0 = case.initial_time
    return InitialData(
        state=exact_state(case, x, y, t0, material),
        grad_x=state_gradient(case, x, y, t0, material, "x"),
        grad_y=state_gradient(case, x, y, t0, material, "y"),
        load=_full_load(case, x, y, t0, material),
    )


def initial_displacement(case: ManufacturedCase, x, y, material: Material) -> np.ndarray:
    return exact_displacement(case, x, y, case.initial_time, material)


class CaseSources:
    """Body load and wall rate of a case, in the form the kernel consumes"""

    def __init__(self, case: ManufacturedCase, material: Material):
        self.case = case
        self.material = material

    def body_load(self, x: np.ndarray, y: np.ndarray, t: float) -> Optional[np.ndarray]:
        return body_load(self.case, x, y, t, self.material)

    def dirichlet_rate(self, x: np.ndarray, y: np.ndarray, t: float) -> np.ndarray:
        return dirichlet_rate(self.case, x, y, t)


def central_difference(func: Callable, x, y, t, axis: str, h: float = 1e-5) -> np.ndarray:
    """
    Second-order central difference of func(x, y, t) along one axis.
    """
    if axis == "x":
        return (func(x + h, y, t) - func(x - h, y, t)) / (2.0 * h)
    if axis == "y":
        return (func(x, y + h, t) - func(x, y - h, t)) / (2.0 * h)
    if axis == "t":
        return (func(x, y, t + h) - func(x, y, t - h)) / (2.0 * h)
    raise ValueError(f"unknown axis {axis!r}")


def pde_residual(case: ManufacturedCase, x, y, t, material: Material, h: float = 1e-5) -> np.ndarray:
    """
    dU/dt + d flux_x(U)/dx + d flux_y(U)/dy - B with every derivative taken by
    finite differences of the exact state.
    """
    def state(a, b, c):
        return exact_state(case, a, b, c, material)

    def phi_x(a, b, c):
        return flux_x(state(a, b, c), material)

    def phi_y(a, b, c):
        return flux_y(state(a, b, c), material)

    residual = (
        central_difference(state, x, y, t, "t", h)
        + central_difference(phi_x, x, y, t, "x", h)
        + central_difference(phi_y, x, y, t, "y", h)
    )
    load = _full_load(case, x, y, t, material)
    return residual if load is None else residual - load


class ManufacturedSolutionProvider:
    """
    Manufactured solution provider: case lookup and kernel adapters.
    """

    def get_case(self, name: CaseName | str) -> ManufacturedCase:
        return get_case(name)

    def sources(self, case: ManufacturedCase, material: Material) -> CaseSources:
        return CaseSources(case=case, material=material)

    def initial_data(self, case: ManufacturedCase, x, y, material: Material) -> InitialData:
        return initial_data(case, x, y, material)

    def initial_displacement(self, case: ManufacturedCase, x, y, material: Material) -> np.ndarray:
        return initial_displacement(case, x, y, material)
