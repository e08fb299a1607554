import logging
import warnings

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import LinAlgError, LinAlgWarning, solve_banded

from ..core.constants import (
    DEFAULT_SEED,
    INVERSE_ITERATION_TOLERANCE,
    MAX_INVERSE_ITERATIONS,
    MAX_SHIFT_RETRIES,
    SHIFT_NUDGE,
)
from ..core.errors import SingularShift
from ..massmodel.grid import GridFunction
from .tridiagonal import TridiagonalSystem

logger = logging.getLogger(__name__)

SIGN_THRESHOLD = 1e-8


def _iterate(
    system: TridiagonalSystem,
    shift: float,
    start: NDArray[np.float64],
    max_iterations: int,
    tolerance: float,
) -> NDArray[np.float64]:
    n = system.size
    banded = np.zeros((3, n))
    banded[0, 1:] = system.offdiag
    banded[1] = system.diag - shift
    banded[2, :-1] = system.offdiag

    vector = start
    for _ in range(max_iterations):
        with warnings.catch_warnings():
            # the shifted matrix is nearly singular on purpose
            warnings.simplefilter("ignore", LinAlgWarning)
            solved = solve_banded((1, 1), banded, vector, check_finite=False)
        norm = np.linalg.norm(solved)
        if not np.isfinite(norm) or norm == 0:
            raise LinAlgError("shifted solve produced a non-finite vector")
        solved /= norm
        if np.dot(solved, vector) < 0:
            solved = -solved
        change = np.linalg.norm(solved - vector)
        vector = solved
        if change < tolerance:
            break
    return vector


def fix_sign(vector: NDArray[np.float64]) -> NDArray[np.float64]:
    """Flip so the first component above 1e-8 of the maximum is positive."""
    scale = np.max(np.abs(vector))
    first = np.argmax(np.abs(vector) > SIGN_THRESHOLD * scale)
    return -vector if vector[first] < 0 else vector


def unit_eigenvector(
    system: TridiagonalSystem,
    energy: float,
    seed: int = DEFAULT_SEED,
    max_iterations: int = MAX_INVERSE_ITERATIONS,
    tolerance: float = INVERSE_ITERATION_TOLERANCE,
) -> NDArray[np.float64]:
    """Euclidean-unit eigenvector u of T near ``energy`` by shifted inverse iteration.

    Raises:
        SingularShift: If the shifted matrix stays singular after MAX_SHIFT_RETRIES nudges
    """
    start = np.random.default_rng(seed).standard_normal(system.size)
    start /= np.linalg.norm(start)

    shift = energy
    for attempt in range(MAX_SHIFT_RETRIES + 1):
        try:
            return fix_sign(_iterate(system, shift, start, max_iterations, tolerance))
        except LinAlgError:
            if attempt == MAX_SHIFT_RETRIES:
                break
            shift = shift * (1.0 + SHIFT_NUDGE) if shift != 0 else SHIFT_NUDGE
            logger.debug("Singular shift near %s, retrying at %s", energy, shift)
    raise SingularShift(f"T - E*I is singular near E = {energy} after {MAX_SHIFT_RETRIES} retries")


def eigenvector(
    system: TridiagonalSystem,
    energy: float,
    seed: int = DEFAULT_SEED,
    max_iterations: int = MAX_INVERSE_ITERATIONS,
    tolerance: float = INVERSE_ITERATION_TOLERANCE,
) -> GridFunction:
    """phi for the eigenvalue ``energy``, with unit weighted norm sum(m phi^2) dx = 1."""
    unit = unit_eigenvector(system, energy, seed, max_iterations, tolerance)
    spacing = system.grid.spacing
    return GridFunction(system.grid, unit / np.sqrt(system.weight * spacing))
