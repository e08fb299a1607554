"""
End-to-end numeric spectrum: discretize, bisect, refine, check the boundary, and
recover wavefunctions.
"""

import logging
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..analytic.morse import morse_spectrum
from ..analytic.spectrum import Level, Route, Spectrum, kappa
from ..ambiguity.classification import nu_value
from ..core.constants import (
    BOUNDARY_SENSITIVITY_THRESHOLD,
    BOUNDARY_SHRINK_FRACTION,
    DEFAULT_RELATIVE_TOLERANCE,
    DEFAULT_SEED,
    INVERSE_ITERATION_TOLERANCE,
    MAX_INVERSE_ITERATIONS,
)
from ..core.models import OrderingParams, SystemConfig
from ..massmodel.grid import Grid, GridFunction
from .inverse import eigenvector
from .refinement import RefinementTable, refinement_table, require_resolution, richardson
from .sturm import clustered_pairs, eigenvalues
from .tridiagonal import BoundaryMode, discretize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverOptions:
    relative_tolerance: float = DEFAULT_RELATIVE_TOLERANCE
    workers: int = 1
    seed: int = DEFAULT_SEED
    max_inverse_iterations: int = MAX_INVERSE_ITERATIONS
    inverse_tolerance: float = INVERSE_ITERATION_TOLERANCE
    boundary_threshold: float = BOUNDARY_SENSITIVITY_THRESHOLD
    boundary_shrink_fraction: float = BOUNDARY_SHRINK_FRACTION
    boundary_mode: BoundaryMode = "asymptotic"

    def to_dict(self) -> dict[str, Any]:
        return {
            "relative_tolerance": self.relative_tolerance,
            "workers": self.workers,
            "seed": self.seed,
            "max_inverse_iterations": self.max_inverse_iterations,
            "inverse_tolerance": self.inverse_tolerance,
            "boundary_threshold": self.boundary_threshold,
            "boundary_shrink_fraction": self.boundary_shrink_fraction,
            "boundary_mode": self.boundary_mode,
        }


@dataclass(frozen=True)
class NumericLevel:
    n: int
    energy: float
    error_estimate: float
    raw_energy: float
    coarse_energy: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "energy": self.energy,
            "error_estimate": self.error_estimate,
            "raw_energy": self.raw_energy,
            "coarse_energy": self.coarse_energy,
        }


@dataclass(frozen=True)
class GridReport:
    grid: Grid
    refined_grid: Grid
    shrunk_grid: Grid
    boundary_shift: tuple[float, ...]
    boundary_sensitive: bool
    clustered: tuple[tuple[int, int], ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "grid": self.grid.to_spec(),
            "refined_grid": self.refined_grid.to_spec(),
            "shrunk_grid": self.shrunk_grid.to_spec(),
            "boundary_shift": list(self.boundary_shift),
            "boundary_sensitive": self.boundary_sensitive,
            "clustered": [list(pair) for pair in self.clustered],
        }


@dataclass(frozen=True)
class NumericSpectrum:
    """Levels with error estimates, and phi / psi = sqrt(m) phi on the base grid."""

    levels: tuple[NumericLevel, ...]
    wavefunctions_phi: tuple[GridFunction, ...] = field(repr=False)
    wavefunctions_psi: tuple[GridFunction, ...] = field(repr=False)
    grid_report: GridReport
    nu: float
    system: SystemConfig = field(repr=False)

    @property
    def energies(self) -> list[float]:
        return [level.energy for level in self.levels]

    @property
    def error_estimates(self) -> list[float]:
        return [level.error_estimate for level in self.levels]

    def to_spectrum(self) -> Spectrum:
        return Spectrum(
            levels=tuple(Level(level.n, level.energy) for level in self.levels),
            nu=self.nu,
            kappa=kappa(self.system),
            route=Route.NUMERIC,
            system=self.system,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "nu": self.nu,
            "levels": [level.to_dict() for level in self.levels],
            "grid_report": self.grid_report.to_dict(),
        }


def _shrink_light_end(system: SystemConfig, grid: Grid, fraction: float) -> Grid:
    return grid.trimmed_left(fraction) if system.c > 0 else grid.trimmed_right(fraction)


def solve_spectrum(
    system: SystemConfig,
    ordering: OrderingParams,
    grid: Grid,
    k: int,
    options: SolverOptions | None = None,
) -> NumericSpectrum:
    """Numeric spectrum of ``ordering`` with Richardson-refined levels.

    Levels are extrapolated from the base grid and its refinement. The error estimate is
    the Richardson error plus the shift caused by moving the light-mass end inward by
    ``boundary_shrink_fraction`` of the domain.

    Raises:
        ComplexOrdering: If the ordering has complex nu
        GridTooCoarse: If the grid is too small or too coarse for the mass scale
    """
    options = options or SolverOptions()
    nu = nu_value(ordering).require_real()
    require_resolution(system, grid)

    def levels_on(g: Grid) -> tuple[Any, list[float]]:
        matrix = discretize(system, ordering, g, options.boundary_mode)
        return matrix, eigenvalues(matrix, k, options.relative_tolerance, options.workers)

    matrix, coarse = levels_on(grid)
    refined_grid = grid.refined()
    _, fine = levels_on(refined_grid)
    shrunk_grid = _shrink_light_end(system, grid, options.boundary_shrink_fraction)
    _, shrunk = levels_on(shrunk_grid)

    extrapolated, richardson_error = richardson(coarse, fine)
    boundary_shift = [abs(s - c) for s, c in zip(shrunk, coarse, strict=True)]
    sensitive = any(
        shift > options.boundary_threshold * max(1.0, abs(e))
        for shift, e in zip(boundary_shift, coarse, strict=True)
    )
    if sensitive:
        logger.warning(
            "Eigenvalues move by up to %.3g when the light end is moved inward; widen the domain",
            max(boundary_shift),
        )

    clusters = clustered_pairs(fine)
    if clusters:
        logger.warning("Clustered eigenvalues %s indicate a grid artifact", clusters)

    levels = tuple(
        NumericLevel(
            n=i,
            energy=float(extrapolated[i]),
            error_estimate=float(richardson_error[i]) + boundary_shift[i],
            raw_energy=fine[i],
            coarse_energy=coarse[i],
        )
        for i in range(k)
    )

    mass = matrix.weight
    phis = tuple(
        eigenvector(
            matrix, energy, options.seed, options.max_inverse_iterations, options.inverse_tolerance
        )
        for energy in coarse
    )
    psis = tuple(GridFunction(grid, phi.values * np.sqrt(mass)) for phi in phis)

    logger.info("Solved %s levels on %s (nu=%s)", k, grid.to_spec(), nu)
    return NumericSpectrum(
        levels=levels,
        wavefunctions_phi=phis,
        wavefunctions_psi=psis,
        grid_report=GridReport(
            grid=grid,
            refined_grid=refined_grid,
            shrunk_grid=shrunk_grid,
            boundary_shift=tuple(boundary_shift),
            boundary_sensitive=sensitive,
            clustered=tuple(clusters),
        ),
        nu=nu,
        system=system,
    )


def convergence_study(
    system: SystemConfig,
    ordering: OrderingParams,
    base_grid: Grid,
    k: int,
    options: SolverOptions | None = None,
) -> RefinementTable:
    """Eigenvalues at spacings h, h/2 and h/4 with orders observed against the exact levels.

    Raises:
        GridTooCoarse: If the base grid is too small or too coarse for the mass scale
    """
    options = options or SolverOptions()
    require_resolution(system, base_grid)
    exact = morse_spectrum(system, ordering, k - 1).energies

    def build(grid: Grid) -> list[float]:
        matrix = discretize(system, ordering, grid, options.boundary_mode)
        return eigenvalues(matrix, k, options.relative_tolerance, options.workers)

    return refinement_table(build, base_grid, halvings=2, reference=exact)
