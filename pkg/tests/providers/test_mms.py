"""
Tests for elastolbm.providers.mms
"""
import math

import numpy as np
import pytest

from elastolbm.exceptions import ConfigError
from elastolbm.libs.consts.enums import CaseName
from elastolbm.providers.mms import (
    ManufacturedCase,
    ManufacturedSolutionProvider,
    body_load,
    central_difference,
    dirichlet_rate,
    displacement,
    exact_state,
    exact_stress,
    exact_velocity,
    get_case,
    initial_data,
    pde_residual,
    state_gradient,
)
from elastolbm.schemas.material import Material
from elastolbm.solver.model import stress_from_state

SAMPLES = np.array([
    [0.13, 0.72, 0.5, 0.91, 0.05],
    [0.61, 0.08, 0.5, 0.33, 0.97],
    [0.0, 0.21, 0.47, 0.8, 1.3],
])


def test_wave52_vanishes_at_phase_zero(wave52: ManufacturedCase) -> None:
    assert displacement(wave52, 0.0, 0.0, 0.1)[0] == pytest.approx(0.0, abs=1e-15)


def test_wave52_is_periodic(wave52: ManufacturedCase) -> None:
    X, Y, T = SAMPLES
    base = displacement(wave52, X, Y, T)
    assert np.allclose(displacement(wave52, X + 1.0, Y, T), base, atol=1e-12)
    assert np.allclose(displacement(wave52, X, Y + 1.0, T), base, atol=1e-12)


def test_stability_ic_values(stability_ic: ManufacturedCase) -> None:
    u = displacement(stability_ic, 0.125, 0.25, 0.0)
    assert u[0] == pytest.approx(-math.sin(0.4 * math.pi), rel=1e-14)
    assert u[1] == pytest.approx(math.sin(1.6 * math.pi), rel=1e-14)


@pytest.mark.parametrize("x, y", [(0.0, 0.3), (1.0, 0.7), (0.4, 0.0), (0.55, 1.0)])
def test_stability_ic_vanishes_on_walls(stability_ic: ManufacturedCase, x, y) -> None:
    assert np.abs(displacement(stability_ic, x, y, 0.0)).max() <= 1e-14


def test_stability_ic_has_no_sources(stability_ic: ManufacturedCase, material: Material) -> None:
    assert body_load(stability_ic, 0.3, 0.4, 0.2, material) is None
    assert not dirichlet_rate(stability_ic, np.zeros(3), np.ones(3), 0.5).any()
    assert initial_data(stability_ic, np.zeros(2), np.zeros(2), material).load is None


@pytest.mark.parametrize("cK2, cmu2", [(1.1, 0.4), (1.5, 0.0), (0.75, 0.75)])
def test_pde_residual_is_small(wave52: ManufacturedCase, cK2, cmu2) -> None:
    """
    The exact state with its load satisfies the first-order system.
    """
    material = Material(cK2=cK2, cmu2=cmu2)
    X, Y, T = SAMPLES
    assert np.abs(pde_residual(wave52, X, Y, T, material)).max() <= 1e-5


def test_state_gradient_matches_finite_difference(wave52: ManufacturedCase, material: Material) -> None:
    """
    Analytic state gradients agree with central differences.
    """
    X, Y, T = SAMPLES
    for axis in ("x", "y"):
        difference = central_difference(
            lambda a, b, c: exact_state(wave52, a, b, c, material), X, Y, T, axis
        )
        assert np.allclose(state_gradient(wave52, X, Y, T, material, axis), difference, atol=1e-5)


def test_state_velocity_is_displacement_rate(wave52: ManufacturedCase, material: Material) -> None:
    X, Y, T = SAMPLES
    assert np.array_equal(exact_state(wave52, X, Y, T, material)[:2], exact_velocity(wave52, X, Y, T, material))


def test_shear_free_material_has_no_shear_state(wave52: ManufacturedCase) -> None:
    X, Y, T = SAMPLES
    state = exact_state(wave52, X, Y, T, Material(cK2=1.5, cmu2=0.0))
    assert not state[3:].any()


@pytest.mark.parametrize("scales", [{}, {"L": 2.0, "T": 0.5, "V": 3.0}])
def test_stress_of_exact_state_matches_material_law(wave52: ManufacturedCase, scales) -> None:
    """
    Stress from the exact state equals the material law applied to the displacement gradient.
    """
    material = Material(cK2=1.1, cmu2=0.4, **scales)
    X, Y, T = SAMPLES
    assert np.allclose(
        stress_from_state(exact_state(wave52, X, Y, T, material), material),
        exact_stress(wave52, X, Y, T, material),
        rtol=1e-12,
        atol=1e-10,
    )


def test_wall_rate_is_displacement_rate(wave52: ManufacturedCase) -> None:
    X, Y, T = SAMPLES
    assert np.array_equal(dirichlet_rate(wave52, X, Y, T), displacement(wave52, X, Y, T, "t"))


def test_unknown_case_is_rejected() -> None:
    with pytest.raises(ConfigError):
        get_case("plane_wave")


def test_provider_looks_up_cases(mms_provider: ManufacturedSolutionProvider) -> None:
    assert mms_provider.get_case("wave52").name is CaseName.WAVE52
    case = mms_provider.get_case(CaseName.STABILITY_IC)
    assert not case.exact
