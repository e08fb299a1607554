"""
Morse route to the exact spectrum.

Substituting m = m0 e^{cx} turns the effective equation into a constant-mass equation
with the Morse-type potential V0 e^{2cx} - E e^{cx} and eigenvalue
eps = (hbar^2/m0)(q - c^2/8). The depth of the well is the energy E itself, so the
usual Morse quantization becomes a condition on E:

    E / (2 kappa) - n - 1/2 = +-nu/2

The left side (the Morse bracket) must be non-negative, which keeps only the + root.
"""

import logging
from dataclasses import dataclass

from ..ambiguity.classification import nu_value, q_value
from ..core.models import OrderingParams, SystemConfig
from .spectrum import Level, Route, Spectrum, kappa, require_bound_states, require_level_count

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MorseReduction:
    epsilon: float
    morse_quadratic_strength: float
    weight_exponent: float
    nu: float


def morse_reduction(system: SystemConfig, ordering: OrderingParams) -> MorseReduction:
    """Reduce the problem to Morse form.

    Raises:
        ComplexOrdering: If nu^2 < 0 for this ordering
    """
    nu = nu_value(ordering).require_real()
    q = q_value(ordering, system)
    epsilon = (system.hbar**2 / system.m0) * (q - system.c**2 / 8.0)
    return MorseReduction(
        epsilon=epsilon,
        morse_quadratic_strength=system.V0,
        weight_exponent=system.c,
        nu=nu,
    )


def morse_branches(system: SystemConfig, ordering: OrderingParams, n_max: int) -> list[Level]:
    """Both roots kappa(2n+1 +- nu) of the quantization condition, with their brackets.

    The + root has bracket nu/2 and is always accepted. The - root has bracket -nu/2;
    it is rejected, and for nu = 0 it only repeats the + root.
    """
    require_level_count(n_max)
    reduction = morse_reduction(system, ordering)
    require_bound_states(system)
    scale = kappa(system)
    nu = reduction.nu

    branches: list[Level] = []
    for n in range(n_max + 1):
        branches.append(Level(n, scale * (2 * n + 1 + nu), "+", nu / 2.0, True))
        branches.append(Level(n, scale * (2 * n + 1 - nu), "-", -nu / 2.0, False))
    return branches


def morse_spectrum(system: SystemConfig, ordering: OrderingParams, n_max: int) -> Spectrum:
    """Levels E_n = hbar |c| sqrt(V0/(2 m0)) (2n + 1 + nu), n = 0..n_max.

    Raises:
        ComplexOrdering: If the ordering has complex nu
        NoBoundStates: If V0 <= 0
    """
    accepted = tuple(level for level in morse_branches(system, ordering, n_max) if level.valid)
    spectrum = Spectrum(
        levels=accepted,
        nu=morse_reduction(system, ordering).nu,
        kappa=kappa(system),
        route=Route.MORSE,
        system=system,
    )
    logger.debug(
        "Morse spectrum nu=%s kappa=%s levels=%s", spectrum.nu, spectrum.kappa, len(spectrum)
    )
    return spectrum
