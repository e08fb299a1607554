"""
Superpotential W = w+ e^{cx/2} + w- e^{-cx/2} and the kinetic weight g = hbar/sqrt(2m).

The coefficients are fixed by W^2 - (gW)' = V + U_nu0 - E0: the e^{cx} terms give
w+^2 = V0 and the e^{-cx} terms give a quadratic in w- with a double root.
"""

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..analytic.spectrum import require_bound_states
from ..core.models import SystemConfig
from ..massmodel.profile import ExponentialProfile, RealLike


@dataclass(frozen=True)
class Superpotential:
    w_plus: float
    w_minus: float
    E0: float

    def to_dict(self) -> dict[str, float]:
        return {"w_plus": self.w_plus, "w_minus": self.w_minus, "E0": self.E0}


@dataclass(frozen=True)
class KineticWeight:
    """g = hbar/sqrt(2m) with g' = -(c/2) g and g'' = (c^2/4) g."""

    g: Any
    g_d1: Any
    g_d2: Any


def kinetic_weight(system: SystemConfig, x: RealLike) -> KineticWeight:
    g = system.hbar / np.sqrt(2.0 * ExponentialProfile(system).mass(x))
    return KineticWeight(g=g, g_d1=-0.5 * system.c * g, g_d2=0.25 * system.c**2 * g)


def solve_superpotential(system: SystemConfig) -> Superpotential:
    """Solve for (w+, w-, E0).

    w+ = sign(c) sqrt(V0), w- = -c hbar/(2 sqrt(2 m0)) and E0 = -2 w+ w-, which is the
    nu = 0 ground level. The sign of w+ follows c so that the zero mode of A decays on
    both sides for either sign of c.

    Raises:
        NoBoundStates: If V0 <= 0
    """
    require_bound_states(system)
    w_plus = math.copysign(math.sqrt(system.V0), system.c)
    w_minus = -system.c * system.hbar / (2.0 * math.sqrt(2.0 * system.m0))
    return Superpotential(w_plus=w_plus, w_minus=w_minus, E0=-2.0 * w_plus * w_minus)


def superpotential_value(sp: Superpotential, system: SystemConfig, x: RealLike) -> Any:
    half = 0.5 * system.c * np.asarray(x, dtype=np.float64)
    return sp.w_plus * np.exp(half) + sp.w_minus * np.exp(-half)


def superpotential_derivative(sp: Superpotential, system: SystemConfig, x: RealLike) -> Any:
    half = 0.5 * system.c * np.asarray(x, dtype=np.float64)
    return 0.5 * system.c * (sp.w_plus * np.exp(half) - sp.w_minus * np.exp(-half))


def superpotential_node(sp: Superpotential, system: SystemConfig) -> float:
    """The single zero of W, at e^{cx} = -w-/w+."""
    return math.log(-sp.w_minus / sp.w_plus) / system.c


def ansatz_potential_strength(system: SystemConfig) -> float:
    """V0 = hbar^2 c^2 / (32 m0), where the mass-form ansatz and the solved W coincide."""
    return system.hbar**2 * system.c**2 / (32.0 * system.m0)


def mass_form_superpotential(system: SystemConfig, x: RealLike) -> Any:
    """W = (hbar c / (8 m0)) sqrt(2m) - hbar c / (2 sqrt(2m)), written through the mass."""
    root_two_m = np.sqrt(2.0 * ExponentialProfile(system).mass(x))
    hc = system.hbar * system.c
    return (hc / (8.0 * system.m0)) * root_two_m - hc / (2.0 * root_two_m)
