"""
Test data fixtures: materials, small lattices and run parameters.
"""
from typing import Optional

import numpy as np
import pytest

from elastolbm.libs.consts.enums import BoundaryMode
from elastolbm.schemas.material import Material
from elastolbm.schemas.run_config import RunConfig
from elastolbm.solver.grid import Lattice, build_lattice


class ZeroSources:
    """No body load and fixed walls"""

    def body_load(self, x, y, t) -> Optional[np.ndarray]:
        return None

    def dirichlet_rate(self, x, y, t) -> np.ndarray:
        return np.zeros((2,) + np.broadcast_shapes(np.shape(x), np.shape(y)))


class ConstantWallRate(ZeroSources):
    def __init__(self, rate: tuple[float, float]):
        self.rate = rate

    def dirichlet_rate(self, x, y, t) -> np.ndarray:
        shape = np.broadcast_shapes(np.shape(x), np.shape(y))
        return np.stack((np.full(shape, self.rate[0]), np.full(shape, self.rate[1])))


@pytest.fixture
def material() -> Material:
    return Material(cK2=1.1, cmu2=0.4)


@pytest.fixture
def zero_sources() -> ZeroSources:
    return ZeroSources()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@pytest.fixture
def periodic_lattice() -> Lattice:
    """10x10 nodes, c = 2.5"""
    return build_lattice(extents=(1.0, 1.0), dx=1 / 10, dt=1 / 25, mode=BoundaryMode.PERIODIC, t_final=1.0)


@pytest.fixture
def dirichlet_lattice() -> Lattice:
    """10x10 nodes on half-way offsets, c = 2.5"""
    return build_lattice(extents=(1.0, 1.0), dx=1 / 10, dt=1 / 25, mode=BoundaryMode.DIRICHLET, t_final=1.0)


@pytest.fixture
def small_run_parameters() -> dict[str, str]:
    """Five steps of wave52 on a 10x10 periodic lattice"""
    return {
        "case": "wave52",
        "mode": "periodic",
        "cK2": "1.1",
        "cmu2": "0.4",
        "dx": "1/10",
        "dt": "1/25",
        "t_final": "1/5",
    }


@pytest.fixture
def small_run_config(small_run_parameters, tmp_path) -> RunConfig:
    return RunConfig.from_layers(small_run_parameters, {"output_dir": str(tmp_path / "runs")})
