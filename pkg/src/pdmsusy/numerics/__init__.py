from .inverse import eigenvector, unit_eigenvector
from .refinement import (
    RefinementRow,
    RefinementTable,
    refinement_table,
    require_resolution,
    richardson,
)
from .solver import (
    GridReport,
    NumericLevel,
    NumericSpectrum,
    SolverOptions,
    convergence_study,
    solve_spectrum,
)
from .sturm import clustered_pairs, eigenvalues, gershgorin_interval, sturm_count
from .tridiagonal import BOUNDARY_MODES, BoundaryMode, TridiagonalSystem, assemble, discretize

__all__ = [
    "TridiagonalSystem",
    "BoundaryMode",
    "BOUNDARY_MODES",
    "assemble",
    "discretize",
    "sturm_count",
    "gershgorin_interval",
    "eigenvalues",
    "clustered_pairs",
    "eigenvector",
    "unit_eigenvector",
    "richardson",
    "require_resolution",
    "RefinementRow",
    "RefinementTable",
    "refinement_table",
    "SolverOptions",
    "NumericLevel",
    "GridReport",
    "NumericSpectrum",
    "solve_spectrum",
    "convergence_study",
]
