"""
Tests for elastolbm.solver.model
"""
import numpy as np
import pytest

from elastolbm.schemas.material import Material
from elastolbm.solver.model import (
    boundary_operator,
    boundary_source,
    dirichlet_source,
    flux_matrices,
    flux_x,
    flux_y,
    stress_from_state,
)

NORMALS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def test_flux_matrices_are_symmetric(material: Material) -> None:
    flux = flux_matrices(material)
    assert np.array_equal(flux.ax, flux.ax.T)
    assert np.array_equal(flux.ay, flux.ay.T)


def test_fluxes_match_dense_matrices(material: Material, rng) -> None:
    """
    Componentwise fluxes equal the dense flux matrices.
    """
    states = rng.standard_normal((5, 1000))
    flux = flux_matrices(material)
    assert np.abs(flux_x(states, material) - flux.ax @ states).max() <= 1e-14
    assert np.abs(flux_y(states, material) - flux.ay @ states).max() <= 1e-14


def test_flux_of_pure_velocity() -> None:
    material = Material(cK2=1.0, cmu2=0.0)
    state = np.array([1.0, 0.0, 0.0, 0.0, 0.0])
    assert np.array_equal(flux_x(state, material), [0.0, 0.0, 1.0, 0.0, 0.0])
    assert not flux_x(np.zeros(5), material).any()


def test_fluxes_are_linear(material: Material, rng) -> None:
    u, w = rng.standard_normal((2, 5, 7))
    combined = flux_y(2.0 * u - 3.0 * w, material)
    assert np.allclose(combined, 2.0 * flux_y(u, material) - 3.0 * flux_y(w, material), atol=1e-14)


def test_stress_from_state() -> None:
    material = Material(cK2=1.0, cmu2=1.0)
    assert np.array_equal(stress_from_state(np.array([0.0, 0.0, 1.0, 0.0, 0.0]), material), [-1.0, -1.0, 0.0])
    assert not stress_from_state(np.zeros(5), material).any()


def test_stress_scales_with_reference_units() -> None:
    """
    Stress picks up the reference velocity and dimensional speeds.
    """
    material = Material(cK2=1.0, cmu2=1.0, L=2.0, T=0.5, V=3.0)
    sigma = stress_from_state(np.array([0.0, 0.0, 0.0, 0.0, 1.0]), material)
    assert sigma == pytest.approx([0.0, 0.0, -12.0])


@pytest.mark.parametrize(
    "cK2, cmu2, link, du_dt, expected",
    [
        (1.0, 1.0, (1, 0), (1.0, 0.0), (0.5, 0.0, 1.0, 1.0, 0.0)),
        (1.0, 4.0, (0, -1), (0.0, 1.0), (0.0, 0.5, -1.0, 2.0, 0.0)),
        (1.1, 0.4, (-1, 0), (0.0, 0.0), (0.0, 0.0, 0.0, 0.0, 0.0)),
    ],
)
def test_dirichlet_source(cK2, cmu2, link, du_dt, expected) -> None:
    material = Material(cK2=cK2, cmu2=cmu2)
    source = dirichlet_source(link, np.array(du_dt), material)
    assert source == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("normal", NORMALS)
def test_boundary_operator_reproduces_wall_source(material: Material, rng, normal) -> None:
    """A state whose velocity equals the wall rate satisfies the mixed boundary condition"""
    du_dt = rng.standard_normal((2, 6))
    state = rng.standard_normal((5, 6))
    state[:2] = du_dt
    assert np.allclose(
        boundary_operator(state, normal, material),
        boundary_source(normal, du_dt, material),
        atol=1e-14,
    )


@pytest.mark.parametrize("link", NORMALS)
def test_dirichlet_source_is_scaled_boundary_source(material: Material, rng, link) -> None:
    """
    The wall source is the mixed boundary right-hand side, velocity rows halved.
    """
    du_dt = rng.standard_normal((2, 4))
    scale = np.array([0.5, 0.5, 1.0, 1.0, 1.0])[:, None]
    assert np.allclose(dirichlet_source(link, du_dt, material), scale * boundary_source(link, du_dt, material))
