from .classification import (
    AmbiguityReport,
    Classification,
    ambiguity_free_orderings,
    equivalence_classes,
    nu_value,
    q_over_c2,
    q_value,
)
from .potential import (
    ambiguity_coefficients,
    ambiguity_potential,
    effective_potential,
    is_ambiguity_free,
    nu0_ambiguity_potential,
    profile_ambiguity_potential,
)

__all__ = [
    "AmbiguityReport",
    "Classification",
    "ambiguity_coefficients",
    "ambiguity_potential",
    "profile_ambiguity_potential",
    "effective_potential",
    "nu0_ambiguity_potential",
    "q_over_c2",
    "q_value",
    "nu_value",
    "is_ambiguity_free",
    "ambiguity_free_orderings",
    "equivalence_classes",
]
