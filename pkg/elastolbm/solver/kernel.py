"""
Population storage, moments, equilibrium, collision, streaming and the time step.

Populations are stored as one array of shape (4, 5, ny, nx): link, state
component, node row, node column.
"""
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Protocol

import numpy as np

from elastolbm.libs.consts.enums import BoundaryMode
from elastolbm.libs.consts.lattice import N_COMPONENTS, N_LINKS
from elastolbm.libs.logger import logger
from elastolbm.libs.shared import Assert
from elastolbm.schemas.lattice import D2Q4, VelocitySet
from elastolbm.schemas.material import Material
from elastolbm.solver.boundary import DirichletData, close_link, wrap_link
from elastolbm.solver.grid import Lattice
from elastolbm.solver.model import flux_x, flux_y
from elastolbm.solver.postprocess import (
    DerivedFields,
    advance_accumulator,
    derive_fields,
    prime_accumulator,
)

__all__ = [
    "SourceTerms",
    "moments",
    "equilibrium",
    "equilibria",
    "collide",
    "stream",
    "stream_link",
    "LatticeBoltzmannSolver",
]


class SourceTerms(DirichletData, Protocol):
    def body_load(self, x: np.ndarray, y: np.ndarray, t: float) -> Optional[np.ndarray]:
        """Body load (b_x, b_y), shape (2, ...), or None when it vanishes"""
        ...


def moments(f: np.ndarray, load: Optional[np.ndarray], dt: float) -> np.ndarray:
    """
    U_num = f_0 + f_1 + f_2 + f_3 + dt/2 B, summed in link order.
    :param f: populations (4, 5, ...)
    :param load: B (5, ...) or None for a vanishing load
    :param dt:
    :return: U_num (5, ...)
    """
    total = f[0] + f[1]
    total += f[2]
    total += f[3]
    if load is not None:
        total += (0.5 * dt) * load
    return total


def equilibrium(state: np.ndarray, link: tuple[int, int], c: float, material: Material) -> np.ndarray:
    """f_eq = 1/4 [U + 2/c (i flux_x(U) + j flux_y(U))]"""
    i, j = link
    return 0.25 * (state + (2.0 / c) * (i * flux_x(state, material) + j * flux_y(state, material)))


def equilibria(
    state: np.ndarray,
    c: float,
    material: Material,
    velocities: VelocitySet = D2Q4,
) -> np.ndarray:
    """Equilibrium of every link, shape (4, 5, ...)"""
    fx = flux_x(state, material)
    fy = flux_y(state, material)
    return np.stack([0.25 * (state + (2.0 / c) * (i * fx + j * fy)) for i, j in velocities.indices])


def collide(f: np.ndarray, f_eq: np.ndarray, omega: float) -> np.ndarray:
    """f* = omega f_eq + (1 - omega) f"""
    return omega * f_eq + (1.0 - omega) * f


def _interior_slices(link: tuple[int, int]) -> tuple[tuple, tuple]:
    """(destination, source) node slices of the links whose target stays inside"""
    i, j = link
    full = slice(None)
    if i == 1:
        return (full, slice(1, None)), (full, slice(None, -1))
    if i == -1:
        return (full, slice(None, -1)), (full, slice(1, None))
    if j == 1:
        return (slice(1, None), full), (slice(None, -1), full)
    return (slice(None, -1), full), (slice(1, None), full)


def stream_link(q: int, f_star: np.ndarray, out: np.ndarray, velocities: VelocitySet = D2Q4) -> None:
    """Push f*_q(x) to x + c_q dt for every target inside the lattice"""
    dst, src = _interior_slices(velocities.indices[q])
    out[q][(slice(None),) + dst] = f_star[q][(slice(None),) + src]


def stream(f_star: np.ndarray, out: np.ndarray, velocities: VelocitySet = D2Q4) -> np.ndarray:
    """
    Interior push streaming of all links; boundary-crossing slots are left untouched.
    """
    for q in range(len(velocities.indices)):
        stream_link(q, f_star, out, velocities)
    return out


class LatticeBoltzmannSolver:
    """
    Time stepping of the vectorial D2Q4 scheme on one lattice.

    Node-local phases are split into row blocks handled by a thread pool;
    streaming runs one task per link. No reduction crosses nodes inside a
    step, so results do not depend on the number of workers.
    """

    def __init__(
        self,
        lattice: Lattice,
        material: Material,
        sources: SourceTerms,
        omega: float = 2.0,
        workers: int = 1,
        cfl_passed: bool = True,
    ):
        Assert.require_in_range(omega, 0.0, 2.0, f"omega must lie in (0, 2], got {omega!r}")
        if omega != 2.0:
            logger.warning(f"omega={omega} != 2: the scheme is first-order only")
        if not cfl_passed:
            logger.warning("CFL condition violated; running under override")
        self.lattice = lattice
        self.material = material
        self.sources = sources
        self.omega = float(omega)
        self.cfl_passed = cfl_passed
        self.workers = max(1, int(workers))

        ny, nx = lattice.shape
        shape = (N_LINKS, N_COMPONENTS, ny, nx)
        self.populations = np.zeros(shape)
        self._next = np.zeros(shape)
        self.u_star = np.zeros((2, ny, nx))
        self.step_index = 0

        self._row_blocks = [
            slice(int(block[0]), int(block[-1]) + 1)
            for block in np.array_split(np.arange(ny), min(self.workers, ny))
            if block.size
        ]
        self._executor: Optional[ThreadPoolExecutor] = (
            ThreadPoolExecutor(max_workers=self.workers, thread_name_prefix="lbm") if self.workers > 1 else None
        )

    def __enter__(self) -> "LatticeBoltzmannSolver":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.close()

    def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    @property
    def dt(self) -> float:
        return self.lattice.discretization.dt

    @property
    def c(self) -> float:
        return self.lattice.discretization.c

    @property
    def time(self) -> float:
        return self.lattice.discretization.time_at(self.step_index)

    def _map(self, func: Callable, items) -> list:
        if self._executor is None:
            return [func(item) for item in items]
        return list(self._executor.map(func, items))

    def load_at(self, t: float) -> Optional[np.ndarray]:
        """B = (b_x, b_y, 0, 0, 0) at every node, None when the load vanishes"""
        x, y = self.lattice.open_mesh
        body = self.sources.body_load(x, y, t)
        if body is None:
            return None
        load = np.zeros((N_COMPONENTS,) + self.lattice.shape)
        load[:2] = body
        return load

    def initialize(self, populations: np.ndarray, u0: np.ndarray) -> DerivedFields:
        """
        Install the t = 0 populations and prime the displacement accumulator.
        :param populations: (4, 5, ny, nx)
        :param u0: dimensional initial displacement (2, ny, nx)
        :return: fields at t = 0
        """
        self.populations[...] = populations
        self.step_index = 0
        state = moments(self.populations, self.load_at(0.0), self.dt)
        v0 = self.material.V * state[:2]
        self.u_star = prime_accumulator(u0, v0, self.material.T * self.dt)
        return self.observe()

    def observe(self) -> DerivedFields:
        """Fields at the current time; leaves the solver state untouched"""
        state = moments(self.populations, self.load_at(self.time), self.dt)
        return derive_fields(state, self.u_star, self.material, self.dt, self.step_index, self.time)

    def _collide_rows(self, rows: slice, load: Optional[np.ndarray], state: np.ndarray) -> None:
        f = self.populations[:, :, rows]
        block = moments(f, None if load is None else load[:, rows], self.dt)
        state[:, rows] = block
        f_eq = equilibria(block, self.c, self.material, self.lattice.velocities)
        self.populations[:, :, rows] = collide(f, f_eq, self.omega)

    def _stream_link(self, q: int, t_half: float) -> None:
        stream_link(q, self.populations, self._next, self.lattice.velocities)
        if self.lattice.mode is BoundaryMode.PERIODIC:
            wrap_link(q, self.populations, self._next, self.lattice)
        else:
            close_link(q, self.populations, self._next, self.lattice, self.sources, t_half, self.material)

    def step(self) -> DerivedFields:
        """
        One time step: moments, displacement and stress, equilibria, collision,
        streaming, boundary closure, accumulator update, buffer swap.
        :return: fields at the time the step started
        """
        discretization = self.lattice.discretization
        m = self.step_index
        t = discretization.time_at(m)
        load = self.load_at(t)

        state = np.empty((N_COMPONENTS,) + self.lattice.shape)
        self._map(lambda rows: self._collide_rows(rows, load, state), self._row_blocks)
        fields = derive_fields(state, self.u_star, self.material, self.dt, m, t)

        t_half = discretization.half_step_time(m)
        self._map(lambda q: self._stream_link(q, t_half), range(N_LINKS))
        self.populations, self._next = self._next, self.populations

        self.u_star = advance_accumulator(fields.u, fields.v, self.material.T * self.dt)
        self.step_index = m + 1
        return fields
