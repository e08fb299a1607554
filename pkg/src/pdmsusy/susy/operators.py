"""
Grid actions of A, A† and the partner Hamiltonians.

A f = g f' + W f and A† f = -(g f)' + W f use central differences inside the grid and
second-order one-sided differences at the ends. H_i f = -(g^2 f')' + V_i f use the
conservative three-point stencil with g^2 at midpoints and zero values beyond the ends.
"""

import numpy as np

from ..core.models import SystemConfig
from ..massmodel.grid import GridFunction
from .partners import partner_potential_1, partner_potential_2
from .superpotential import (
    Superpotential,
    kinetic_weight,
    solve_superpotential,
    superpotential_value,
)


def _derivative(values: np.ndarray, spacing: float) -> np.ndarray:
    return np.gradient(values, spacing, edge_order=2)


def _resolve(system: SystemConfig, sp: Superpotential | None) -> Superpotential:
    return sp if sp is not None else solve_superpotential(system)


def apply_A(
    f: GridFunction, system: SystemConfig, sp: Superpotential | None = None
) -> GridFunction:
    f.grid.require_points()
    sp = _resolve(system, sp)
    x = f.points
    g = kinetic_weight(system, x).g
    w = superpotential_value(sp, system, x)
    return GridFunction(f.grid, g * _derivative(f.values, f.grid.spacing) + w * f.values)


def apply_Adag(
    f: GridFunction, system: SystemConfig, sp: Superpotential | None = None
) -> GridFunction:
    f.grid.require_points()
    sp = _resolve(system, sp)
    x = f.points
    g = kinetic_weight(system, x).g
    w = superpotential_value(sp, system, x)
    return GridFunction(f.grid, -_derivative(g * f.values, f.grid.spacing) + w * f.values)


def _kinetic(f: GridFunction, system: SystemConfig) -> np.ndarray:
    grid = f.grid
    spacing = grid.spacing
    x_half = grid.x_min + spacing * (np.arange(grid.n + 1) + 0.5)
    g_half_sq = kinetic_weight(system, x_half).g ** 2

    padded = np.concatenate(([0.0], f.values, [0.0]))
    flux = g_half_sq * np.diff(padded) / spacing
    return -np.diff(flux) / spacing


def apply_H1(
    f: GridFunction, system: SystemConfig, sp: Superpotential | None = None
) -> GridFunction:
    """H1 f = A†A f = -(g^2 f')' + V1 f."""
    f.grid.require_points()
    sp = _resolve(system, sp)
    v1 = partner_potential_1(sp, system, f.points)
    return GridFunction(f.grid, _kinetic(f, system) + v1 * f.values)


def apply_H2(
    f: GridFunction, system: SystemConfig, sp: Superpotential | None = None
) -> GridFunction:
    """H2 f = AA† f = -(g^2 f')' + V2 f."""
    f.grid.require_points()
    sp = _resolve(system, sp)
    v2 = partner_potential_2(sp, system, f.points)
    return GridFunction(f.grid, _kinetic(f, system) + v2 * f.values)


def intertwining_defect(
    f: GridFunction, system: SystemConfig, sp: Superpotential | None = None
) -> GridFunction:
    """(H2 A - A H1) f, zero for the exact operators and O(spacing^2) on the grid."""
    sp = _resolve(system, sp)
    lhs = apply_H2(apply_A(f, system, sp), system, sp)
    rhs = apply_A(apply_H1(f, system, sp), system, sp)
    return lhs - rhs
