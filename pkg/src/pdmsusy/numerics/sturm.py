"""
Sturm-sequence eigenvalue counting and bisection for symmetric tridiagonal matrices.

Bisection itself is LAPACK's dstebz (Gershgorin bracket, Sturm counts, bisection to an
absolute width), called once per eigenvalue index so the result of an index never
depends on which other indices are requested or on the number of worker threads.
"""

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.linalg import LinAlgError, eigvalsh_tridiagonal

from ..core.constants import CLUSTER_TOLERANCE, DEFAULT_RELATIVE_TOLERANCE
from ..core.errors import ToleranceNotReached, ValidationError
from .tridiagonal import TridiagonalSystem

logger = logging.getLogger(__name__)


def gershgorin_interval(system: TridiagonalSystem) -> tuple[float, float]:
    """Interval containing every eigenvalue."""
    radius = np.zeros(system.size)
    radius[:-1] += np.abs(system.offdiag)
    radius[1:] += np.abs(system.offdiag)
    return float(np.min(system.diag - radius)), float(np.max(system.diag + radius))


def sturm_count(system: TridiagonalSystem, shift: ArrayLike) -> NDArray[np.int64] | int:
    """Number of eigenvalues below ``shift`` (vectorized over shifts).

    Counts negative pivots of the LDL^T factorization of T - shift*I. Pivots that
    vanish are replaced by -pivmin.
    """
    shifts = np.atleast_1d(np.asarray(shift, dtype=np.float64))
    squared = system.offdiag**2
    pivmin = np.finfo(np.float64).tiny * max(1.0, float(np.max(squared, initial=0.0)))

    pivot = system.diag[0] - shifts
    pivot = np.where(np.abs(pivot) < pivmin, -pivmin, pivot)
    count = (pivot < 0).astype(np.int64)
    for i in range(1, system.size):
        pivot = system.diag[i] - shifts - squared[i - 1] / pivot
        pivot = np.where(np.abs(pivot) < pivmin, -pivmin, pivot)
        count += pivot < 0

    if np.ndim(shift) == 0:
        return int(count[0])
    return count


def _bisect_index(system: TridiagonalSystem, index: int, tolerance: float) -> float:
    try:
        values = eigvalsh_tridiagonal(
            system.diag,
            system.offdiag,
            select="i",
            select_range=(index, index),
            check_finite=False,
            tol=tolerance,
            lapack_driver="stebz",
        )
    except LinAlgError as e:
        raise ToleranceNotReached(f"Bisection for eigenvalue {index} did not converge: {e}") from e
    return float(values[0])


def eigenvalues(
    system: TridiagonalSystem,
    k: int,
    tolerance: float = DEFAULT_RELATIVE_TOLERANCE,
    workers: int = 1,
) -> list[float]:
    """The k smallest eigenvalues in ascending order.

    Each eigenvalue is bisected to an absolute width of ``tolerance``, which is within
    tolerance * max(1, |E|). Neighbours closer than that are bisected again to
    CLUSTER_TOLERANCE before being reported as distinct.

    Raises:
        ValidationError: If k is not in 1..n
        ToleranceNotReached: If bisection fails
    """
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= system.size:
        raise ValidationError(f"k must be between 1 and {system.size}, got {k!r}")

    indices = range(k)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            values = list(executor.map(lambda i: _bisect_index(system, i, tolerance), indices))
    else:
        values = [_bisect_index(system, i, tolerance) for i in indices]

    for i in range(1, k):
        gap = values[i] - values[i - 1]
        if gap <= 2.0 * tolerance * max(1.0, abs(values[i])):
            logger.debug("Tightening bisection for near-degenerate pair %s, %s", i - 1, i)
            values[i - 1] = _bisect_index(system, i - 1, CLUSTER_TOLERANCE)
            values[i] = _bisect_index(system, i, CLUSTER_TOLERANCE)

    low, high = gershgorin_interval(system)
    if values[0] < low - tolerance or values[-1] > high + tolerance:
        raise ToleranceNotReached(
            f"Eigenvalues fall outside the Gershgorin interval [{low}, {high}]"
        )
    return values


def clustered_pairs(
    values: list[float], tolerance: float = CLUSTER_TOLERANCE
) -> list[tuple[int, int]]:
    """Index pairs of neighbouring eigenvalues closer than tolerance * max(1, |E|)."""
    return [
        (i - 1, i)
        for i in range(1, len(values))
        if values[i] - values[i - 1] <= tolerance * max(1.0, abs(values[i]))
    ]
