"""
Richardson extrapolation and grid-refinement tables.

Refined grids keep the domain and use n' = 2n + 1 interior points, so the spacing halves
exactly and every coarse point stays a grid point.
"""

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..core.constants import MAX_SPACING_TIMES_C
from ..core.errors import GridTooCoarse
from ..core.models import SystemConfig
from ..massmodel.grid import Grid

SECOND_ORDER = 2


def richardson(coarse: Any, fine: Any, order: int = SECOND_ORDER) -> tuple[Any, Any]:
    """Extrapolate values at spacings h and h/2.

    Returns:
        (extrapolated, error) with error = |fine - coarse| / (2^order - 1)
    """
    coarse_arr = np.asarray(coarse, dtype=np.float64)
    fine_arr = np.asarray(fine, dtype=np.float64)
    factor = 2.0**order - 1.0
    return fine_arr + (fine_arr - coarse_arr) / factor, np.abs(fine_arr - coarse_arr) / factor


def require_resolution(system: SystemConfig, grid: Grid) -> None:
    """Raise GridTooCoarse if the grid is too small or does not resolve the 1/|c| mass scale."""
    grid.require_points()
    if grid.spacing * system.abs_c > MAX_SPACING_TIMES_C:
        raise GridTooCoarse(
            f"Grid spacing {grid.spacing:.4g} does not resolve the mass scale 1/|c| = "
            f"{1.0 / system.abs_c:.4g} (need spacing*|c| <= {MAX_SPACING_TIMES_C})"
        )


def _log2_ratio(numerator: float, denominator: float) -> float:
    if numerator <= 0 or denominator <= 0:
        return math.nan
    return math.log2(numerator / denominator)


@dataclass(frozen=True)
class RefinementRow:
    n: int
    spacing: float
    values: tuple[float, ...]


@dataclass(frozen=True)
class RefinementTable:
    """Values at spacings h, h/2, h/4, ... with observed convergence orders.

    ``orders[j]`` holds one order per level, from the j-th and (j+1)-th halvings.
    """

    rows: tuple[RefinementRow, ...]
    orders: tuple[tuple[float, ...], ...]
    extrapolated: tuple[float, ...]
    extrapolation_error: tuple[float, ...]
    reference: tuple[float, ...] | None = None

    def raw_errors(self) -> tuple[float, ...] | None:
        """Error of the finest raw values against the reference."""
        if self.reference is None:
            return None
        return tuple(abs(v - r) for v, r in zip(self.rows[-1].values, self.reference, strict=True))

    def extrapolated_errors(self) -> tuple[float, ...] | None:
        if self.reference is None:
            return None
        return tuple(abs(v - r) for v, r in zip(self.extrapolated, self.reference, strict=True))

    def to_dict(self) -> dict[str, Any]:
        return {
            "rows": [
                {"n": row.n, "spacing": row.spacing, "values": list(row.values)}
                for row in self.rows
            ],
            "orders": [list(level) for level in self.orders],
            "extrapolated": list(self.extrapolated),
            "extrapolation_error": list(self.extrapolation_error),
            "reference": None if self.reference is None else list(self.reference),
        }


def refinement_table(
    build: Callable[[Grid], Sequence[float]],
    base_grid: Grid,
    halvings: int = 2,
    reference: Sequence[float] | None = None,
) -> RefinementTable:
    """Evaluate ``build`` on base_grid and ``halvings`` successive refinements.

    With a reference the order is log2 of successive errors against it; without one,
    log2 of the ratio of successive differences (needs halvings >= 2).
    """
    grids = [base_grid]
    for _ in range(halvings):
        grids.append(grids[-1].refined())
    rows = tuple(RefinementRow(g.n, g.spacing, tuple(float(v) for v in build(g))) for g in grids)

    values = np.array([row.values for row in rows])
    orders: list[tuple[float, ...]] = []
    if reference is not None:
        errors = np.abs(values - np.asarray(reference, dtype=np.float64))
        for j in range(len(rows) - 1):
            pairs = zip(errors[j], errors[j + 1], strict=True)
            orders.append(tuple(_log2_ratio(a, b) for a, b in pairs))
    else:
        diffs = np.abs(np.diff(values, axis=0))
        for j in range(len(diffs) - 1):
            pairs = zip(diffs[j], diffs[j + 1], strict=True)
            orders.append(tuple(_log2_ratio(a, b) for a, b in pairs))

    extrapolated, error = richardson(values[-2], values[-1])
    return RefinementTable(
        rows=rows,
        orders=tuple(orders),
        extrapolated=tuple(float(v) for v in extrapolated),
        extrapolation_error=tuple(float(v) for v in error),
        reference=None if reference is None else tuple(float(v) for v in reference),
    )
