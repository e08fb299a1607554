"""Tests for the finite-difference assembly."""

import numpy as np
import pytest

from pdmsusy.core.errors import ComplexOrdering, GridTooCoarse, InvalidGrid
from pdmsusy.core.models import SystemConfig
from pdmsusy.core.ordering import preset
from pdmsusy.massmodel.grid import Grid
from pdmsusy.numerics.tridiagonal import TridiagonalSystem, assemble, discretize


class TestAssemble:
    def test_free_particle_in_a_box(self) -> None:
        grid = Grid(0.0, 1.0, 63)
        system = assemble(grid, np.ones(grid.n), np.zeros(grid.n))
        h = grid.spacing
        expected = (1.0 - np.cos(np.arange(1, grid.n + 1) * np.pi * h)) / h**2
        np.testing.assert_allclose(np.linalg.eigvalsh(system.to_dense()), expected, rtol=1e-10)

    def test_symmetric(self) -> None:
        grid = Grid(-1.0, 1.0, 9)
        mass = np.exp(grid.points)
        dense = assemble(grid, mass, grid.points**2).to_dense()
        np.testing.assert_array_equal(dense, dense.T)

    def test_ghost_lowers_end_diagonal(self) -> None:
        grid = Grid(0.0, 1.0, 9)
        dirichlet = assemble(grid, np.ones(9), np.zeros(9))
        neumann = assemble(grid, np.ones(9), np.zeros(9), left_ghost=1.0)
        assert neumann.diag[0] == pytest.approx(dirichlet.diag[0] / 2)
        np.testing.assert_array_equal(neumann.diag[1:], dirichlet.diag[1:])

    def test_rayleigh_quotient_of_eigenvector(self) -> None:
        grid = Grid(-1.0, 1.0, 31)
        mass = np.exp(grid.points)
        system = assemble(grid, mass, 1.0 + grid.points**2)
        values, vectors = np.linalg.eigh(system.to_dense())
        phi = vectors[:, 0] / np.sqrt(mass)
        assert system.weighted_rayleigh_quotient(phi) == pytest.approx(values[0], rel=1e-12)

    def test_matvec_matches_dense(self) -> None:
        grid = Grid(0.0, 1.0, 7)
        system = assemble(grid, 1.0 + grid.points, grid.points)
        vector = np.arange(7, dtype=float)
        np.testing.assert_allclose(system.matvec(vector), system.to_dense() @ vector)

    def test_rejects_tiny_grid(self) -> None:
        with pytest.raises(GridTooCoarse):
            assemble(Grid(0.0, 1.0, 2), np.ones(2), np.zeros(2))


class TestTridiagonalSystem:
    def test_shape_mismatch(self) -> None:
        with pytest.raises(InvalidGrid):
            TridiagonalSystem(np.ones(3), np.ones(3), Grid(0.0, 1.0, 3), np.ones(3))

    def test_weight_must_be_positive(self) -> None:
        with pytest.raises(InvalidGrid):
            TridiagonalSystem(np.ones(3), np.ones(2), Grid(0.0, 1.0, 3), np.array([1.0, 0.0, 1.0]))

    def test_arrays_are_frozen(self) -> None:
        system = TridiagonalSystem(np.ones(3), np.ones(2), Grid(0.0, 1.0, 3), np.ones(3))
        with pytest.raises(ValueError):
            system.diag[0] = 2.0


class TestDiscretize:
    def test_light_end_follows_sign_of_c(self, zhu_kroemer) -> None:
        grid = Grid(-5.0, 5.0, 99)
        up = discretize(SystemConfig(c=1.0), zhu_kroemer, grid)
        up_wall = discretize(SystemConfig(c=1.0), zhu_kroemer, grid, "dirichlet")
        assert up.diag[0] < up_wall.diag[0]
        assert up.diag[-1] == up_wall.diag[-1]

        down = discretize(SystemConfig(c=-1.0), zhu_kroemer, grid)
        down_wall = discretize(SystemConfig(c=-1.0), zhu_kroemer, grid, "dirichlet")
        assert down.diag[-1] < down_wall.diag[-1]
        assert down.diag[0] == down_wall.diag[0]

    def test_weight_is_mass(self, reference_system, zhu_kroemer) -> None:
        grid = Grid(-5.0, 5.0, 99)
        np.testing.assert_allclose(discretize(reference_system, zhu_kroemer, grid).weight, np.exp(grid.points))

    def test_complex_ordering(self, reference_system) -> None:
        with pytest.raises(ComplexOrdering):
            discretize(reference_system, preset("gora-williams").params, Grid(-5.0, 5.0, 99))

    def test_unknown_boundary_mode(self, reference_system, zhu_kroemer) -> None:
        with pytest.raises(InvalidGrid):
            discretize(reference_system, zhu_kroemer, Grid(-5.0, 5.0, 99), "periodic")  # type: ignore[arg-type]
