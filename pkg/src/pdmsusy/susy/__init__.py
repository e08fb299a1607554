from .operators import apply_A, apply_Adag, apply_H1, apply_H2, intertwining_defect
from .partners import (
    IdentityResiduals,
    identity_residuals,
    partner_potential_1,
    partner_potential_2,
    spectral_pairing,
)
from .superpotential import (
    KineticWeight,
    Superpotential,
    ansatz_potential_strength,
    kinetic_weight,
    mass_form_superpotential,
    solve_superpotential,
    superpotential_derivative,
    superpotential_node,
    superpotential_value,
)

__all__ = [
    "Superpotential",
    "KineticWeight",
    "kinetic_weight",
    "solve_superpotential",
    "superpotential_value",
    "superpotential_derivative",
    "superpotential_node",
    "mass_form_superpotential",
    "ansatz_potential_strength",
    "partner_potential_1",
    "partner_potential_2",
    "IdentityResiduals",
    "identity_residuals",
    "spectral_pairing",
    "apply_A",
    "apply_Adag",
    "apply_H1",
    "apply_H2",
    "intertwining_defect",
]
