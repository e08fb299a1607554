"""
Uniform grids of interior points and functions sampled on them.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import NDArray

from ..core.constants import MIN_GRID_POINTS
from ..core.errors import GridTooCoarse, InvalidGrid

FloatArray = NDArray[np.float64]


@dataclass(frozen=True)
class Grid:
    """Interior points x_i = x_min + (i+1)·Δ, i = 0..n-1, with Δ = (x_max - x_min)/(n+1).

    The end points carry the boundary conditions and are not stored.
    """

    x_min: float
    x_max: float
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "x_min", float(self.x_min))
        object.__setattr__(self, "x_max", float(self.x_max))
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise InvalidGrid("Grid bounds must be finite")
        if self.x_min >= self.x_max:
            raise InvalidGrid(f"x_min ({self.x_min}) must be below x_max ({self.x_max})")
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise InvalidGrid(f"n must be a positive integer, got {self.n}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.n + 1)

    @property
    def length(self) -> float:
        return self.x_max - self.x_min

    @property
    def points(self) -> FloatArray:
        return self.x_min + self.spacing * np.arange(1, self.n + 1, dtype=np.float64)

    def require_points(self, minimum: int = MIN_GRID_POINTS) -> None:
        """Raise GridTooCoarse if the grid has fewer than ``minimum`` interior points."""
        if self.n < minimum:
            raise GridTooCoarse(f"Grid needs at least {minimum} interior points, has {self.n}")

    def refined(self) -> "Grid":
        """Same domain with half the spacing; every old point is kept."""
        return Grid(self.x_min, self.x_max, 2 * self.n + 1)

    def trimmed_left(self, fraction: float) -> "Grid":
        """Move x_min inward by about ``fraction`` of the length, keeping the spacing."""
        drop = max(1, round(fraction * (self.n + 1)))
        return Grid(self.x_min + drop * self.spacing, self.x_max, self.n - drop)

    def trimmed_right(self, fraction: float) -> "Grid":
        drop = max(1, round(fraction * (self.n + 1)))
        return Grid(self.x_min, self.x_max - drop * self.spacing, self.n - drop)

    def to_spec(self) -> str:
        return f"{self.x_min!r}:{self.x_max!r}:{self.n}"


@dataclass(frozen=True)
class GridFunction:
    """Real samples of a function on the interior points of a grid."""

    grid: Grid
    values: FloatArray = field(repr=False)

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64)
        if values.shape != (self.grid.n,):
            raise InvalidGrid(
                f"GridFunction needs {self.grid.n} values, got array of shape {values.shape}"
            )
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def points(self) -> FloatArray:
        return self.grid.points

    def norm(self, weight: FloatArray | None = None) -> float:
        """Discrete L2 norm sqrt(sum w_i f_i^2 Δ)."""
        squares = self.values**2 if weight is None else weight * self.values**2
        return float(np.sqrt(np.sum(squares) * self.grid.spacing))

    def normalized(self, weight: FloatArray | None = None) -> "GridFunction":
        norm = self.norm(weight)
        if norm == 0:
            raise ValueError("Cannot normalize a zero function")
        return GridFunction(self.grid, self.values / norm)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        self._check_same_grid(other)
        return GridFunction(self.grid, self.values - other.values)

    def scaled(self, factor: float | FloatArray) -> "GridFunction":
        return GridFunction(self.grid, self.values * factor)

    def _check_same_grid(self, other: "GridFunction") -> None:
        if other.grid != self.grid:
            raise InvalidGrid("GridFunctions live on different grids")


def sample(f: Callable[[Any], Any], grid: Grid) -> GridFunction:
    """Sample a pointwise function on the interior points of ``grid``.

    ``f`` may be vectorized (called once with the point array) or scalar-only, and
    may return a constant.
    """
    points = grid.points
    try:
        result = np.asarray(f(points), dtype=np.float64)
    except TypeError:
        result = np.fromiter((f(float(x)) for x in points), dtype=np.float64, count=grid.n)
    if result.shape != points.shape:
        result = np.broadcast_to(result, points.shape)
    return GridFunction(grid, result)
