"""
Exponentially graded mass m(x) = m0 e^{cx} and potential V(x) = V0 e^{cx}.

Derivatives are closed forms; the profile is log-linear, so m'/m = c and m''/m = c^2.
"""

from dataclasses import dataclass
from typing import Any, TypeAlias

import numpy as np
from numpy.typing import NDArray

from ..core.models import SystemConfig

RealLike: TypeAlias = float | NDArray[np.float64]


@dataclass(frozen=True)
class ExponentialProfile:
    system: SystemConfig

    def _growth(self, x: Any) -> Any:
        return np.exp(self.system.c * np.asarray(x, dtype=np.float64))

    def mass(self, x: RealLike) -> Any:
        return self.system.m0 * self._growth(x)

    def mass_d1(self, x: RealLike) -> Any:
        return self.system.c * self.mass(x)

    def mass_d2(self, x: RealLike) -> Any:
        return self.system.c**2 * self.mass(x)

    def mass_triple(self, x: RealLike) -> tuple[Any, Any, Any]:
        """(m, m', m'') at x, sharing one exponential evaluation."""
        m = self.mass(x)
        c = self.system.c
        return m, c * m, c * c * m

    def bare_potential(self, x: RealLike) -> Any:
        return self.system.V0 * self._growth(x)


def mass(profile: ExponentialProfile, x: RealLike) -> Any:
    return profile.mass(x)


def mass_d1(profile: ExponentialProfile, x: RealLike) -> Any:
    return profile.mass_d1(x)


def mass_d2(profile: ExponentialProfile, x: RealLike) -> Any:
    return profile.mass_d2(x)


def bare_potential(profile: ExponentialProfile, x: RealLike) -> Any:
    return profile.bare_potential(x)
