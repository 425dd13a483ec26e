"""
CFL gate, symmetrizer, weighted population norm and collision-algebra checks
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from elastolbm.exceptions import SymmetrizerError
from elastolbm.libs.consts.lattice import N_COMPONENTS, N_LINKS, REFLECTION
from elastolbm.libs.logger import logger
from elastolbm.schemas.lattice import D2Q4, VelocitySet
from elastolbm.schemas.material import Material
from elastolbm.schemas.report import AlgebraCheck, AlgebraReport, CFLResult, NormTracePoint
from elastolbm.solver.kernel import equilibria
from elastolbm.solver.model import flux_matrices, flux_x, flux_y

__all__ = [
    "Symmetrizer",
    "cfl_check",
    "link_matrices",
    "build_symmetrizer",
    "weighted_norm",
    "plain_norm",
    "assemble_collision_matrices",
    "algebra_checks",
    "NormMonitor",
]

PROJECTOR_TOLERANCE = 1e-12
SPECTRUM_TOLERANCE = 1e-10
SYMMETRY_TOLERANCE = 1e-12
MOMENT_TOLERANCE = 1e-13


@dataclass(frozen=True, eq=False)
class Symmetrizer:
    """k_ij = g_ij^-1 for every link, stacked as (4, 5, 5)"""
    g: np.ndarray
    k: np.ndarray


def cfl_check(material: Material, c: float) -> CFLResult:
    """Passes iff 2 sqrt(cK^2 + cmu^2) < c"""
    margin = 2.0 * material.max_speed / c
    return CFLResult(passed=margin < 1.0, margin=margin, c=c)


def link_matrices(material: Material, c: float, velocities: VelocitySet = D2Q4) -> np.ndarray:
    """g_ij = I/4 + (i Ax + j Ay) / (2c), stacked as (4, 5, 5)"""
    flux = flux_matrices(material)
    identity = np.eye(N_COMPONENTS)
    return np.stack([0.25 * identity + (i * flux.ax + j * flux.ay) / (2.0 * c) for i, j in velocities.indices])


def build_symmetrizer(material: Material, c: float, velocities: VelocitySet = D2Q4) -> Symmetrizer:
    """
    Invert every g_ij and symmetrize; refuses when any k_ij is not positive definite.
    """
    g = link_matrices(material, c, velocities)
    k = np.linalg.inv(g)
    k = 0.5 * (k + np.swapaxes(k, -1, -2))
    smallest = np.linalg.eigvalsh(k).min()
    if not smallest > 0.0:
        raise SymmetrizerError(
            f"symmetrizer is not positive definite (smallest eigenvalue {smallest:.3e}); "
            f"CFL margin {cfl_check(material, c).margin:.6g}"
        )
    return Symmetrizer(g=g, k=k)


def weighted_norm(f: np.ndarray, symmetrizer: Symmetrizer) -> float:
    """
    sqrt(sum_x sum_ij f_ij^T k_ij f_ij) for populations of shape (4, 5, ...)
    """
    total = 0.0
    for q in range(N_LINKS):
        weighted = np.tensordot(symmetrizer.k[q], f[q], axes=(1, 0))
        total += float(np.sum(f[q] * weighted))
    return float(np.sqrt(total))


def plain_norm(f: np.ndarray) -> float:
    """Unweighted Euclidean norm, used when no symmetrizer exists"""
    return float(np.sqrt(np.sum(f * f)))


def assemble_collision_matrices(
    material: Material,
    c: float,
    omega: float,
    velocities: VelocitySet = D2Q4,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    20x20 G = [g_ij] [I I I I], J = omega (G - I) and K = blockdiag(k_ij).
    """
    g = link_matrices(material, c, velocities)
    size = N_LINKS * N_COMPONENTS
    column = np.concatenate(list(g), axis=0)
    big_g = np.tile(column, (1, N_LINKS))
    big_j = omega * (big_g - np.eye(size))
    big_k = np.zeros((size, size))
    k = build_symmetrizer(material, c, velocities).k
    for q in range(N_LINKS):
        block = slice(q * N_COMPONENTS, (q + 1) * N_COMPONENTS)
        big_k[block, block] = k[q]
    return big_g, big_j, big_k


def _moment_defect(material: Material, c: float, velocities: VelocitySet) -> float:
    """Largest violation of the equilibrium moment conditions over the unit states"""
    basis = np.eye(N_COMPONENTS)
    f_eq = equilibria(basis, c, material, velocities)
    i = np.array([link[0] for link in velocities.indices], dtype=float)[:, None, None]
    j = np.array([link[1] for link in velocities.indices], dtype=float)[:, None, None]
    defects = (
        f_eq.sum(axis=0) - basis,
        (c * i * f_eq).sum(axis=0) - flux_x(basis, material),
        (c * j * f_eq).sum(axis=0) - flux_y(basis, material),
        (c * c * (i * i - j * j) * f_eq).sum(axis=0),
    )
    return float(max(np.abs(defect).max() for defect in defects))


def _spectrum_distance(values: np.ndarray, targets: tuple[float, ...]) -> float:
    return float(max(min(abs(value - target) for target in targets) for value in values))


def algebra_checks(
    material: Material,
    c: float,
    omega: float,
    velocities: VelocitySet = D2Q4,
) -> AlgebraReport:
    """
    Numerical checks of the collision algebra: G is a projector with spectrum
    in {0, 1}, K J is symmetric and -J has spectrum in {0, omega}.
    Raises SymmetrizerError when k_ij is not positive definite.
    """
    cfl = cfl_check(material, c)
    k = build_symmetrizer(material, c, velocities).k
    big_g, big_j, big_k = assemble_collision_matrices(material, c, omega, velocities)

    projector = float(np.abs(big_g @ big_g - big_g).max())
    spectrum_g = _spectrum_distance(np.linalg.eigvals(big_g), (0.0, 1.0))
    kj = big_k @ big_j
    symmetry = float(np.abs(kj - kj.T).max())
    spectrum_j = _spectrum_distance(np.linalg.eigvals(-big_j), (0.0, omega))
    reflection = np.diag(REFLECTION)
    # relative to the largest weight, which grows as the CFL margin approaches 1
    reflected = max(
        float(np.abs(k[velocities.opposite[q]] - reflection.T @ k[q] @ reflection).max())
        for q in range(N_LINKS)
    ) / float(np.abs(k).max())

    moments = _moment_defect(material, c, velocities)

    checks = [
        AlgebraCheck(name="equilibrium moments", value=moments, tolerance=MOMENT_TOLERANCE),
        AlgebraCheck(name="G^2 = G", value=projector, tolerance=PROJECTOR_TOLERANCE),
        AlgebraCheck(name="spectrum(G) in {0,1}", value=spectrum_g, tolerance=SPECTRUM_TOLERANCE),
        AlgebraCheck(name="K J symmetric", value=symmetry, tolerance=SYMMETRY_TOLERANCE),
        AlgebraCheck(name="spectrum(-J) in {0,omega}", value=spectrum_j, tolerance=SPECTRUM_TOLERANCE),
        AlgebraCheck(name="k_-ij = D k_ij D", value=reflected, tolerance=SYMMETRY_TOLERANCE),
    ]
    report = AlgebraReport(cK2=material.cK2, cmu2=material.cmu2, c=c, omega=omega, cfl=cfl, checks=checks)
    for check in checks:
        logger.debug(f"{check.name}: {check.value:.3e} (tolerance {check.tolerance:.0e})")
    return report


class NormMonitor:
    """
    Records the population norm at a fixed stride and flags divergence.

    Uses the weighted norm when a symmetrizer exists and the plain Euclidean
    norm otherwise. Reads the populations only.
    """

    def __init__(
        self,
        symmetrizer: Optional[Symmetrizer],
        dt: float,
        stride: int = 1,
        divergence_factor: float = 1e6,
    ):
        if symmetrizer is None:
            logger.warning("No symmetrizer available; monitoring the unweighted population norm")
        self.symmetrizer = symmetrizer
        self.dt = dt
        self.stride = max(1, int(stride))
        self.divergence_factor = divergence_factor
        self.initial: Optional[float] = None
        self.trace: list[NormTracePoint] = []

    @property
    def weighted(self) -> bool:
        return self.symmetrizer is not None

    def measure(self, f: np.ndarray) -> float:
        if self.symmetrizer is None:
            return plain_norm(f)
        return weighted_norm(f, self.symmetrizer)

    def due(self, step: int) -> bool:
        return step % self.stride == 0

    def record(self, step: int, f: np.ndarray) -> NormTracePoint:
        norm = self.measure(f)
        if self.initial is None:
            self.initial = norm
        drift = abs(norm - self.initial) / self.initial if self.initial > 0.0 else abs(norm)
        point = NormTracePoint(step=step, time=step * self.dt, norm=norm, relative_drift=drift)
        self.trace.append(point)
        return point

    def diverged(self, point: NormTracePoint) -> bool:
        if not np.isfinite(point.norm):
            return True
        return self.initial is not None and point.norm > self.divergence_factor * max(self.initial, np.finfo(float).tiny)

    @property
    def max_drift(self) -> float:
        return max((point.relative_drift for point in self.trace), default=0.0)
