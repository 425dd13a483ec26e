"""
Rectangular lattice topology, node classification and boundary-link geometry.

Arrays are laid out as (..., ny, nx) so that flattening gives row-major node
order with x fastest.
"""
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from elastolbm.exceptions import LatticeError
from elastolbm.libs.consts.enums import BoundaryMode
from elastolbm.libs.consts.lattice import HALF_WAY, N_LINKS
from elastolbm.schemas.lattice import D2Q4, Discretization, VelocitySet

__all__ = [
    "NodeClass",
    "Lattice",
    "build_lattice",
    "wall_point",
    "neighbor_map",
    "source_map",
]


@dataclass(frozen=True, eq=False)
class NodeClass:
    """
    Boundary classification of every node.

    `missing[q]` marks the nodes whose incoming population along link q has no
    source inside the domain (the set D_x). `wall_x`, `wall_y` and
    `wall_distance` hold the crossing point x_b and the normalized distance q
    for those slots and NaN elsewhere.
    """
    boundary: np.ndarray
    missing: np.ndarray
    wall_x: np.ndarray
    wall_y: np.ndarray
    wall_distance: np.ndarray

    @property
    def n_boundary(self) -> int:
        return int(self.boundary.sum())

    def links_of(self, ix: int, iy: int, velocities: VelocitySet = D2Q4) -> tuple[tuple[int, int], ...]:
        """D_x of node (ix, iy)"""
        return tuple(link for q, link in enumerate(velocities.indices) if self.missing[q, iy, ix])


@dataclass(frozen=True, eq=False)
class Lattice:
    discretization: Discretization
    nodes: NodeClass
    x: np.ndarray
    y: np.ndarray
    velocities: VelocitySet = field(default=D2Q4)

    @property
    def mode(self) -> BoundaryMode:
        return self.discretization.mode

    @property
    def shape(self) -> tuple[int, int]:
        return self.discretization.ny, self.discretization.nx

    @cached_property
    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        """Node coordinates X, Y of shape (ny, nx)"""
        return np.meshgrid(self.x, self.y)

    @cached_property
    def open_mesh(self) -> tuple[np.ndarray, np.ndarray]:
        """Node coordinates as broadcastable rows (1, nx) and columns (ny, 1)"""
        return np.meshgrid(self.x, self.y, sparse=True)

    def node_position(self, ix: int, iy: int) -> tuple[float, float]:
        return float(self.x[ix]), float(self.y[iy])


def _node_count(extent: float, dx: float, tolerance: float, axis: str) -> int:
    count = round(extent / dx)
    if count < 1 or abs(count * dx - extent) > tolerance * extent:
        raise LatticeError(f"extent {extent!r} along {axis} is not divisible by dx={dx!r}")
    return count


def _classify(
    x: np.ndarray,
    y: np.ndarray,
    extents: tuple[float, float],
    dx: float,
    velocities: VelocitySet,
) -> NodeClass:
    ny, nx = y.size, x.size
    lx, ly = extents
    missing = np.zeros((N_LINKS, ny, nx), dtype=bool)
    wall_x = np.full((N_LINKS, ny, nx), np.nan)
    wall_y = np.full((N_LINKS, ny, nx), np.nan)
    distance = np.full((N_LINKS, ny, nx), np.nan)
    X, Y = np.meshgrid(x, y)

    for q, (i, j) in enumerate(velocities.indices):
        # the incoming population along (i, j) comes from x - (i, j) dx
        if i == 1:
            rows, cols, gap = slice(None), 0, X[:, 0] - 0.0
        elif i == -1:
            rows, cols, gap = slice(None), nx - 1, lx - X[:, nx - 1]
        elif j == 1:
            rows, cols, gap = 0, slice(None), Y[0, :] - 0.0
        else:
            rows, cols, gap = ny - 1, slice(None), ly - Y[ny - 1, :]
        q_link = gap / dx
        missing[q, rows, cols] = True
        distance[q, rows, cols] = q_link
        wall_x[q, rows, cols] = X[rows, cols] - i * q_link * dx
        wall_y[q, rows, cols] = Y[rows, cols] - j * q_link * dx

    return NodeClass(
        boundary=missing.any(axis=0),
        missing=missing,
        wall_x=wall_x,
        wall_y=wall_y,
        wall_distance=distance,
    )


def build_lattice(
    extents: tuple[float, float],
    dx: float,
    dt: float,
    mode: BoundaryMode,
    t_final: float,
    tolerance: float = 1e-12,
    velocities: VelocitySet = D2Q4,
) -> Lattice:
    """
    Build the node layout of a rectangular domain.

    Periodic lattices start at the origin and have no boundary nodes.
    Dirichlet lattices are offset by half a spacing so every boundary link
    crosses the wall at q = 1/2.
    :param extents: (Lx, Ly)
    :param dx:
    :param dt:
    :param mode:
    :param t_final:
    :param tolerance: relative tolerance on extent divisibility
    :param velocities:
    :return:
    """
    if not dx > 0.0 or not dt > 0.0:
        raise LatticeError(f"dx and dt must be positive, got dx={dx!r}, dt={dt!r}")
    if not t_final > 0.0:
        raise LatticeError(f"t_final must be positive, got {t_final!r}")
    lx, ly = (float(e) for e in extents)
    if not lx > 0.0 or not ly > 0.0:
        raise LatticeError(f"extents must be positive, got {extents!r}")
    nx = _node_count(lx, dx, tolerance, "x")
    ny = _node_count(ly, dx, tolerance, "y")
    if nx < 2 or ny < 2:
        raise LatticeError(f"at least 2 nodes per axis are required, got {nx}x{ny}")

    mode = BoundaryMode(mode)
    offset = 0.5 * dx if mode is BoundaryMode.DIRICHLET else 0.0
    x = offset + dx * np.arange(nx)
    y = offset + dx * np.arange(ny)

    try:
        discretization = Discretization(
            dx=dx,
            dt=dt,
            c=dx / dt,
            nx=nx,
            ny=ny,
            x0=(offset, offset),
            extents=(lx, ly),
            t_final=t_final,
            mode=mode,
        )
    except ValueError as exc:
        raise LatticeError(str(exc), debug_detail=exc) from exc

    if mode is BoundaryMode.DIRICHLET:
        nodes = _classify(x, y, (lx, ly), dx, velocities)
        distances = nodes.wall_distance[nodes.missing]
        if not np.allclose(distances, HALF_WAY, rtol=0.0, atol=1e-9):
            raise LatticeError("boundary links must cross the wall half a spacing from the node")
    else:
        shape = (N_LINKS, ny, nx)
        nodes = NodeClass(
            boundary=np.zeros((ny, nx), dtype=bool),
            missing=np.zeros(shape, dtype=bool),
            wall_x=np.full(shape, np.nan),
            wall_y=np.full(shape, np.nan),
            wall_distance=np.full(shape, np.nan),
        )
    return Lattice(discretization=discretization, nodes=nodes, x=x, y=y, velocities=velocities)


def wall_point(lattice: Lattice, node: tuple[int, int], link: tuple[int, int]) -> tuple[float, float]:
    """
    Crossing point of a boundary link with the wall.

    `link` may be given as the missing incoming direction (i, j) in D_x or as
    its outgoing partner (-i, -j); both name the same lattice link.
    :param lattice:
    :param node: (ix, iy)
    :param link:
    :return: (x_b, y_b)
    """
    ix, iy = node
    velocities = lattice.velocities
    i, j = link
    for candidate in ((i, j), (-i, -j)):
        q = velocities.index_of(candidate)
        if lattice.nodes.missing[q, iy, ix]:
            return float(lattice.nodes.wall_x[q, iy, ix]), float(lattice.nodes.wall_y[q, iy, ix])
    raise LatticeError(f"link {link} of node {node} does not cross the boundary")


def _shifted_indices(lattice: Lattice, link: tuple[int, int]) -> np.ndarray:
    ny, nx = lattice.shape
    i, j = link
    index = np.arange(nx * ny).reshape(ny, nx)
    # value at p is the index of p + (i, j)
    shifted = np.roll(index, shift=(-j, -i), axis=(0, 1))
    if lattice.mode is BoundaryMode.DIRICHLET:
        if i == 1:
            shifted[:, -1] = -1
        elif i == -1:
            shifted[:, 0] = -1
        elif j == 1:
            shifted[-1, :] = -1
        else:
            shifted[0, :] = -1
    return shifted.reshape(-1)


def neighbor_map(lattice: Lattice, link: tuple[int, int]) -> np.ndarray:
    """
    Flat index of x + (i, j) dx for every node, -1 where the target leaves the domain.
    """
    return _shifted_indices(lattice, link)


def source_map(lattice: Lattice, link: tuple[int, int]) -> np.ndarray:
    """
    Flat index of x - (i, j) dx for every node, -1 where the source lies outside.
    """
    i, j = link
    return _shifted_indices(lattice, (-i, -j))
