"""
Finite-difference assembly of the mass-weighted eigenproblem.

The transformed equation -(hbar^2/2m) phi'' + U_eff phi = E phi is multiplied by m:

    A phi = E D phi,   A = -(hbar^2/2) d^2/dx^2 + m U_eff,   D = diag(m)

and reduced by the congruence T = D^{-1/2} A D^{-1/2}, which is symmetric tridiagonal
with the same eigenvalues. End conditions enter through the ghost value just outside
the grid, phi_ghost = rho * phi_end: rho = 0 is a Dirichlet wall, rho = 1 is Neumann.
"""

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from ..ambiguity.classification import nu_value
from ..ambiguity.potential import effective_potential
from ..core.errors import InvalidGrid
from ..core.models import OrderingParams, SystemConfig
from ..massmodel.grid import FloatArray, Grid
from ..massmodel.profile import ExponentialProfile

BoundaryMode = Literal["asymptotic", "dirichlet"]
BOUNDARY_MODES: tuple[str, ...] = ("asymptotic", "dirichlet")


def _frozen(values: FloatArray) -> FloatArray:
    array = np.array(values, dtype=np.float64)
    array.flags.writeable = False
    return array


@dataclass(frozen=True)
class TridiagonalSystem:
    """Symmetric tridiagonal T with the mass samples it was reduced by."""

    diag: FloatArray = field(repr=False)
    offdiag: FloatArray = field(repr=False)
    grid: Grid
    weight: FloatArray = field(repr=False)

    def __post_init__(self) -> None:
        n = self.grid.n
        if self.diag.shape != (n,) or self.weight.shape != (n,) or self.offdiag.shape != (n - 1,):
            raise InvalidGrid(f"Tridiagonal arrays do not match grid size {n}")
        if not np.all(self.weight > 0):
            raise InvalidGrid("Mass weight must be strictly positive")
        object.__setattr__(self, "diag", _frozen(self.diag))
        object.__setattr__(self, "offdiag", _frozen(self.offdiag))
        object.__setattr__(self, "weight", _frozen(self.weight))

    @property
    def size(self) -> int:
        return self.grid.n

    def matvec(self, vector: FloatArray) -> FloatArray:
        result = self.diag * vector
        result[:-1] += self.offdiag * vector[1:]
        result[1:] += self.offdiag * vector[:-1]
        return result

    def to_dense(self) -> FloatArray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def weighted_rayleigh_quotient(self, phi: FloatArray) -> float:
        """phi^T A phi / phi^T D phi, with A = D^{1/2} T D^{1/2}."""
        root_weight = np.sqrt(self.weight)
        a_diag = self.diag * self.weight
        a_off = self.offdiag * root_weight[:-1] * root_weight[1:]
        numerator = np.sum(a_diag * phi**2) + 2.0 * np.sum(a_off * phi[:-1] * phi[1:])
        return float(numerator / np.sum(self.weight * phi**2))


def assemble(
    grid: Grid,
    mass: FloatArray,
    potential: FloatArray,
    hbar: float = 1.0,
    left_ghost: float = 0.0,
    right_ghost: float = 0.0,
) -> TridiagonalSystem:
    """Build T for -(hbar^2/2m) phi'' + potential * phi on ``grid``.

    Args:
        grid: Interior points
        mass: m at the grid points
        potential: Potential at the grid points
        hbar: Reduced Planck constant
        left_ghost: Ratio phi(x_min) / phi(x_0); 0 for Dirichlet
        right_ghost: Ratio phi(x_max) / phi(x_{n-1}); 0 for Dirichlet
    """
    grid.require_points()
    mass = np.asarray(mass, dtype=np.float64)
    potential = np.asarray(potential, dtype=np.float64)
    step = hbar**2 / grid.spacing**2

    a_diag = step + mass * potential
    a_diag[0] -= 0.5 * step * left_ghost
    a_diag[-1] -= 0.5 * step * right_ghost
    root_mass = np.sqrt(mass)

    return TridiagonalSystem(
        diag=a_diag / mass,
        offdiag=-0.5 * step / (root_mass[:-1] * root_mass[1:]),
        grid=grid,
        weight=mass,
    )


def light_end_ghost(system: SystemConfig, nu: float, grid: Grid) -> float:
    """Ghost ratio of the recessive light-end solution phi ~ e^{-|c| nu |x| / 2}."""
    return math.exp(-0.5 * system.abs_c * nu * grid.spacing)


def discretize(
    system: SystemConfig,
    ordering: OrderingParams,
    grid: Grid,
    boundary_mode: BoundaryMode = "asymptotic",
) -> TridiagonalSystem:
    """Discretize the effective equation of ``ordering`` on ``grid``.

    The heavy-mass end is always a Dirichlet wall. With ``boundary_mode="asymptotic"``
    the light-mass end follows the decaying asymptotic solution, which keeps the
    truncation error exponentially small for every nu, including nu = 0.

    Raises:
        ComplexOrdering: If the ordering has complex nu
        GridTooCoarse: If the grid has fewer than 3 points
    """
    nu = nu_value(ordering).require_real()
    grid.require_points()
    if boundary_mode not in BOUNDARY_MODES:
        raise InvalidGrid(f"Unknown boundary mode: {boundary_mode!r}")

    profile = ExponentialProfile(system)
    x = grid.points
    light = light_end_ghost(system, nu, grid) if boundary_mode == "asymptotic" else 0.0
    left, right = (light, 0.0) if system.c > 0 else (0.0, light)
    return assemble(
        grid,
        profile.mass(x),
        effective_potential(ordering, profile, x),
        system.hbar,
        left_ghost=left,
        right_ghost=right,
    )
