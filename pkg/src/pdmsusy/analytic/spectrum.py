import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..core.errors import NoBoundStates, ValidationError
from ..core.models import SystemConfig


class Route(Enum):
    MORSE = "morse"
    OSCILLATOR = "oscillator"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class Level:
    n: int
    energy: float
    branch: str = "+"
    bracket: float | None = None
    valid: bool = True

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "energy": self.energy,
            "branch": self.branch,
            "bracket": self.bracket,
            "valid": self.valid,
        }


@dataclass(frozen=True)
class Spectrum:
    """Bound-state levels E_0 < E_1 < ... of one ordering on one system."""

    levels: tuple[Level, ...]
    nu: float
    kappa: float
    route: Route
    system: SystemConfig = field(repr=False, default_factory=SystemConfig)

    @property
    def energies(self) -> list[float]:
        return [level.energy for level in self.levels]

    def __len__(self) -> int:
        return len(self.levels)

    def to_dict(self) -> dict[str, Any]:
        return {
            "route": self.route.value,
            "nu": self.nu,
            "kappa": self.kappa,
            "levels": [{"n": level.n, "energy": level.energy} for level in self.levels],
        }


def kappa(system: SystemConfig) -> float:
    """Energy scale hbar |c| sqrt(V0 / (2 m0)); also the nu = 0 ground level."""
    require_bound_states(system)
    return system.hbar * system.abs_c * math.sqrt(system.V0 / (2.0 * system.m0))


def require_bound_states(system: SystemConfig) -> None:
    if not system.has_bound_states:
        raise NoBoundStates(f"V0 = {system.V0} <= 0: the potential has no bound states")


def require_level_count(n_max: int) -> None:
    if isinstance(n_max, bool) or not isinstance(n_max, int) or n_max < 0:
        raise ValidationError(f"n_max must be a non-negative integer, got {n_max!r}")
