"""Tests for the grid actions of A, A† and the partner Hamiltonians."""

import numpy as np
import pytest

from pdmsusy.analytic.ground_state import ground_state_closed_form
from pdmsusy.core.errors import GridTooCoarse
from pdmsusy.core.models import SystemConfig
from pdmsusy.massmodel.grid import Grid, GridFunction, sample
from pdmsusy.susy.operators import apply_A, apply_Adag, apply_H1, apply_H2, intertwining_defect
from pdmsusy.susy.partners import partner_potential_1, partner_potential_2
from pdmsusy.susy.superpotential import solve_superpotential


def _annihilation_residual(system: SystemConfig, grid: Grid) -> float:
    psi = ground_state_closed_form(system, grid)
    return apply_A(psi, system).max_abs()


class TestApplyA:
    @pytest.mark.parametrize("c", [1.0, -1.0])
    def test_ground_state_is_annihilated(self, c: float) -> None:
        system = SystemConfig(c=c)
        grid = Grid(-36.0, 8.0, 879) if c > 0 else Grid(-8.0, 36.0, 879)
        assert _annihilation_residual(system, grid) < 5e-3

    def test_second_order_convergence(self, reference_system) -> None:
        coarse = Grid(-36.0, 8.0, 879)
        fine = coarse.refined()
        ratio = _annihilation_residual(reference_system, coarse) / _annihilation_residual(
            reference_system, fine
        )
        assert 3.3 <= ratio <= 4.8

    def test_rejects_tiny_grid(self, reference_system) -> None:
        with pytest.raises(GridTooCoarse):
            apply_A(GridFunction(Grid(0.0, 1.0, 2), np.ones(2)), reference_system)


class TestAdjointAndHamiltonians:
    def test_adag_is_discrete_adjoint_inside(self, reference_system) -> None:
        grid = Grid(-6.0, 6.0, 2399)
        bump = sample(lambda x: np.exp(-(x**2)), grid)
        other = sample(lambda x: x * np.exp(-(x**2) / 2.0), grid)
        left = float(np.dot(apply_A(bump, reference_system).values, other.values)) * grid.spacing
        right = float(np.dot(bump.values, apply_Adag(other, reference_system).values)) * grid.spacing
        assert left == pytest.approx(right, rel=1e-5)

    def test_h1_annihilates_ground_state(self, reference_system, moderate_grid) -> None:
        psi = ground_state_closed_form(reference_system, moderate_grid)
        sp = solve_superpotential(reference_system)
        x = moderate_grid.points
        window = x > -10.0
        residual = apply_H1(psi, reference_system, sp).values[window]
        scale = np.max(np.abs(partner_potential_1(sp, reference_system, x[window]) * psi.values[window]))
        assert np.max(np.abs(residual)) < 1e-3 * scale

    def test_h2_minus_h1_is_potential_difference(self, reference_system, moderate_grid) -> None:
        sp = solve_superpotential(reference_system)
        f = sample(lambda x: np.exp(-((x + 1.0) ** 2)), moderate_grid)
        difference = apply_H2(f, reference_system, sp) - apply_H1(f, reference_system, sp)
        x = moderate_grid.points
        expected = (
            partner_potential_2(sp, reference_system, x) - partner_potential_1(sp, reference_system, x)
        ) * f.values
        np.testing.assert_allclose(difference.values, expected, rtol=1e-9, atol=1e-12)


class TestIntertwining:
    @staticmethod
    def _defect(system: SystemConfig, grid: Grid) -> float:
        f = sample(lambda x: np.exp(-(x**2)), grid)
        return float(np.max(np.abs(intertwining_defect(f, system).values[4:-4])))

    def test_defect_is_second_order(self, reference_system) -> None:
        grids = [Grid(-6.0, 6.0, 399)]
        grids += [grids[-1].refined(), grids[-1].refined().refined()]
        defects = [self._defect(reference_system, grid) for grid in grids]
        assert defects[-1] < 2e-3
        for coarse, fine in zip(defects, defects[1:], strict=False):
            assert 3.5 <= coarse / fine <= 4.5

    def test_negative_c(self) -> None:
        system = SystemConfig(c=-1.0)
        coarse = self._defect(system, Grid(-6.0, 6.0, 399))
        fine = self._defect(system, Grid(-6.0, 6.0, 799))
        assert 3.5 <= coarse / fine <= 4.5
