"""
Closed-form ground state of the nu = 0 family.

psi_0(x) = exp[(c/2) x - (sqrt(2 m0 V0)/(hbar |c|)) e^{cx}], the zero mode of A.
"""

import math

import numpy as np

from ..core.constants import DOMAIN_TAIL_RATIO
from ..core.errors import DomainTooSmall
from ..core.models import SystemConfig
from ..massmodel.grid import Grid, GridFunction
from ..massmodel.profile import ExponentialProfile
from .spectrum import require_bound_states


def ground_state_log(system: SystemConfig, x: np.ndarray) -> np.ndarray:
    require_bound_states(system)
    c = system.c
    strength = math.sqrt(2.0 * system.m0 * system.V0) / (system.hbar * abs(c))
    return 0.5 * c * x - strength * np.exp(c * x)


def ground_state_peak(system: SystemConfig) -> float:
    """Location x* of the maximum: e^{c x*} = hbar |c| / (2 sqrt(2 m0 V0))."""
    require_bound_states(system)
    ratio = system.hbar * system.abs_c / (2.0 * math.sqrt(2.0 * system.m0 * system.V0))
    return math.log(ratio) / system.c


def ground_state_closed_form(system: SystemConfig, grid: Grid) -> GridFunction:
    """psi_0 sampled on ``grid`` with unit discrete L2 norm.

    Raises:
        DomainTooSmall: If |psi_0| at an end point exceeds 1e-6 of its maximum
        NoBoundStates: If V0 <= 0
    """
    log_psi = ground_state_log(system, grid.points)
    values = np.exp(log_psi - np.max(log_psi))

    tail = max(values[0], values[-1])
    if tail > DOMAIN_TAIL_RATIO:
        raise DomainTooSmall(
            f"Ground state is {tail:.3g} of its maximum at the grid end; "
            f"widen [{grid.x_min}, {grid.x_max}]"
        )
    return GridFunction(grid, values).normalized()


def ground_state_phi(system: SystemConfig, grid: Grid) -> GridFunction:
    """phi_0 = m^{-1/2} psi_0, unit norm in the weighted inner product sum m phi^2 dx."""
    psi = ground_state_closed_form(system, grid)
    mass = ExponentialProfile(system).mass(grid.points)
    return GridFunction(grid, psi.values / np.sqrt(mass))
