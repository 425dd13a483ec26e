"""
Periodic wrap and the half-way Dirichlet closure.

Both closures complete the slots that interior streaming leaves empty in the
next population buffer. Each function handles one link so the kernel can run
links in parallel; writes never overlap between links.
"""
from typing import Protocol

import numpy as np

from elastolbm.exceptions import LatticeError
from elastolbm.libs.consts.enums import BoundaryMode
from elastolbm.libs.consts.lattice import REFLECTION
from elastolbm.schemas.material import Material
from elastolbm.solver.grid import Lattice
from elastolbm.solver.model import dirichlet_source

__all__ = [
    "DirichletData",
    "apply_periodic",
    "apply_dirichlet",
    "wrap_link",
    "close_link",
]


class DirichletData(Protocol):
    def dirichlet_rate(self, x: np.ndarray, y: np.ndarray, t: float) -> np.ndarray:
        """Time derivative of the prescribed displacement, shape (2, ...)"""
        ...


def _edge_slices(link: tuple[int, int]) -> tuple[tuple, tuple]:
    """(destination, source) index of the wrapped column or row for a link"""
    i, j = link
    if i == 1:
        return (slice(None), 0), (slice(None), -1)
    if i == -1:
        return (slice(None), -1), (slice(None), 0)
    if j == 1:
        return (0, slice(None)), (-1, slice(None))
    return (-1, slice(None)), (0, slice(None))


def wrap_link(q: int, f_star: np.ndarray, out: np.ndarray, lattice: Lattice) -> None:
    """Outgoing populations along link q re-enter on the opposite side"""
    dst, src = _edge_slices(lattice.velocities.indices[q])
    out[q][(slice(None),) + dst] = f_star[q][(slice(None),) + src]


def close_link(
    q: int,
    f_star: np.ndarray,
    out: np.ndarray,
    lattice: Lattice,
    data: DirichletData,
    t_half: float,
    material: Material,
) -> None:
    """
    f_q(x, t + dt) = D f*_{-q}(x, t) + S_q(x_b, t + dt/2) on every node missing link q

    The flux rows of S enter the populations with the same 1/c that the
    equilibrium puts on the fluxes.
    """
    mask = lattice.nodes.missing[q]
    if not mask.any():
        return
    opposite = lattice.velocities.opposite[q]
    reflected = REFLECTION[:, None] * f_star[opposite][:, mask]
    du_dt = data.dirichlet_rate(lattice.nodes.wall_x[q][mask], lattice.nodes.wall_y[q][mask], t_half)
    source = dirichlet_source(lattice.velocities.indices[q], du_dt, material)
    source[2:] /= lattice.discretization.c
    out[q][:, mask] = reflected + source


def apply_periodic(f_star: np.ndarray, out: np.ndarray, lattice: Lattice) -> np.ndarray:
    """
    Complete `out` after interior streaming on a periodic lattice.
    :param f_star: post-collision populations (4, 5, ny, nx)
    :param out: next buffer with interior links already streamed
    :param lattice:
    :return: out
    """
    if lattice.mode is not BoundaryMode.PERIODIC:
        raise LatticeError("periodic wrap requested on a dirichlet lattice")
    for q in range(len(lattice.velocities.indices)):
        wrap_link(q, f_star, out, lattice)
    return out


def apply_dirichlet(
    f_star: np.ndarray,
    out: np.ndarray,
    lattice: Lattice,
    data: DirichletData,
    t_half: float,
    material: Material,
) -> np.ndarray:
    """
    Fill every missing incoming population of the boundary nodes.
    :param f_star: post-collision populations (4, 5, ny, nx)
    :param out: next buffer with interior links already streamed
    :param lattice:
    :param data: provider of the wall displacement rate
    :param t_half: t + dt/2
    :param material:
    :return: out
    """
    if lattice.mode is not BoundaryMode.DIRICHLET:
        raise LatticeError("dirichlet closure requested on a periodic lattice")
    for q in range(len(lattice.velocities.indices)):
        close_link(q, f_star, out, lattice, data, t_half, material)
    return out
