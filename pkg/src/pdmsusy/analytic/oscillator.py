"""
Oscillator route: with y = e^{cx/2} the same problem becomes a radial harmonic
oscillator with a centripetal barrier l(l+1)/y^2.
"""

import math
from dataclasses import dataclass

from ..core.models import OrderingParams, SystemConfig
from .morse import morse_reduction
from .spectrum import Level, Route, Spectrum, kappa, require_bound_states, require_level_count


@dataclass(frozen=True)
class OscillatorMap:
    omega: float
    l_effective: float
    energy_rescale: float

    def level(self, hbar: float, n: int) -> float:
        """Oscillator level hbar omega (2n + l + 3/2) in rescaled energy units."""
        return hbar * self.omega * (2 * n + self.l_effective + 1.5)


def oscillator_map(system: SystemConfig, ordering: OrderingParams) -> OscillatorMap:
    reduction = morse_reduction(system, ordering)
    require_bound_states(system)
    hc2 = system.hbar**2 * system.c**2
    barrier = -(hc2 + 32.0 * system.m0 * reduction.epsilon) / (4.0 * hc2)
    # regular root of l(l+1) = barrier
    l_effective = -0.5 + math.sqrt(max(0.25 + barrier, 0.0))
    return OscillatorMap(
        omega=(2.0 / system.abs_c) * math.sqrt(2.0 * system.V0 / system.m0),
        l_effective=l_effective,
        energy_rescale=4.0 / system.c**2,
    )


def oscillator_spectrum(system: SystemConfig, ordering: OrderingParams, n_max: int) -> Spectrum:
    """E_n = (c^2/4) hbar omega (2n + l + 3/2); agrees with the Morse route."""
    require_level_count(n_max)
    mapping = oscillator_map(system, ordering)
    levels = tuple(
        Level(n, mapping.level(system.hbar, n) / mapping.energy_rescale)
        for n in range(n_max + 1)
    )
    return Spectrum(
        levels=levels,
        nu=mapping.l_effective + 0.5,
        kappa=kappa(system),
        route=Route.OSCILLATOR,
        system=system,
    )
