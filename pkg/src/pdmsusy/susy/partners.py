"""
Partner potentials of H1 = A†A and H2 = AA†, with the identities they satisfy.

Both potentials are evaluated term by term from W, g and their exact derivatives, so
comparing them with V and U_nu0 is a real check of the factorization.
"""

from dataclasses import dataclass
from typing import Any

import numpy as np

from ..ambiguity.potential import nu0_ambiguity_potential
from ..core.models import SystemConfig
from ..massmodel.profile import ExponentialProfile, RealLike
from .superpotential import (
    Superpotential,
    kinetic_weight,
    superpotential_derivative,
    superpotential_value,
)


def partner_potential_1(sp: Superpotential, system: SystemConfig, x: RealLike) -> Any:
    """V1 = W^2 - (gW)'."""
    w = superpotential_value(sp, system, x)
    w_d1 = superpotential_derivative(sp, system, x)
    kw = kinetic_weight(system, x)
    return w**2 - (kw.g_d1 * w + kw.g * w_d1)


def partner_potential_2(sp: Superpotential, system: SystemConfig, x: RealLike) -> Any:
    """V2 = W^2 + g W' - g' W - g g'' (expansion of AA†)."""
    w = superpotential_value(sp, system, x)
    w_d1 = superpotential_derivative(sp, system, x)
    kw = kinetic_weight(system, x)
    return w**2 + kw.g * w_d1 - kw.g_d1 * w - kw.g * kw.g_d2


@dataclass(frozen=True)
class IdentityResiduals:
    """Largest pointwise residuals of the factorization identities.

    ``*_relative`` divides each pointwise residual by the sum of the magnitudes of the
    terms involved at that point; ``*_absolute`` is the raw maximum.
    """

    factorization_absolute: float
    factorization_relative: float
    partner_absolute: float
    partner_relative: float
    max_abs_potential: float

    def to_dict(self) -> dict[str, float]:
        return {
            "factorization_absolute": self.factorization_absolute,
            "factorization_relative": self.factorization_relative,
            "partner_absolute": self.partner_absolute,
            "partner_relative": self.partner_relative,
            "max_abs_potential": self.max_abs_potential,
        }


def identity_residuals(sp: Superpotential, system: SystemConfig, x: RealLike) -> IdentityResiduals:
    """Check V1 + E0 = V + U_nu0 and V2 = V at the points ``x``."""
    x = np.asarray(x, dtype=np.float64)
    potential = ExponentialProfile(system).bare_potential(x)
    u_nu0 = nu0_ambiguity_potential(system, x)
    v1 = partner_potential_1(sp, system, x)
    v2 = partner_potential_2(sp, system, x)

    w = superpotential_value(sp, system, x)
    w_d1 = superpotential_derivative(sp, system, x)
    kw = kinetic_weight(system, x)
    term_scale = w**2 + np.abs(kw.g * w_d1) + np.abs(kw.g_d1 * w) + np.abs(kw.g * kw.g_d2)

    factorization = np.abs(v1 + sp.E0 - potential - u_nu0)
    partner = np.abs(v2 - potential)
    return IdentityResiduals(
        factorization_absolute=float(np.max(factorization)),
        factorization_relative=float(np.max(factorization / (term_scale + sp.E0 + np.abs(u_nu0)))),
        partner_absolute=float(np.max(partner)),
        partner_relative=float(np.max(partner / term_scale)),
        max_abs_potential=float(np.max(np.abs(potential))),
    )


def spectral_pairing(
    nu0_levels: list[float], bdd_levels: list[float], E0: float
) -> list[tuple[int, float]]:
    """Residuals E_n(nu=0) - E0 - E_{n-1}(BDD) for every n >= 1 both lists cover.

    Entry n = 0 is E_0(nu=0) - E0, the unpaired zero mode.
    """
    pairs: list[tuple[int, float]] = []
    if nu0_levels:
        pairs.append((0, nu0_levels[0] - E0))
    for n in range(1, min(len(nu0_levels), len(bdd_levels) + 1)):
        pairs.append((n, nu0_levels[n] - E0 - bdd_levels[n - 1]))
    return pairs
