"""
Ordering-ambiguity potential and the effective potential of the transformed equation.
"""

from typing import Any

from ..core.models import OrderingParams, Scalar, SystemConfig
from ..massmodel.profile import ExponentialProfile, RealLike


def ambiguity_coefficients(ordering: OrderingParams) -> tuple[Scalar, Scalar]:
    """Coefficients (alpha+gamma-a, a-alpha*gamma-alpha-gamma) of m m'' and 2 m'^2."""
    a, alpha, _, gamma = ordering.as_tuple()
    return alpha + gamma - a, a - alpha * gamma - alpha - gamma


def is_ambiguity_free(ordering: OrderingParams, tolerance: float = 1e-12) -> bool:
    """True if both coefficients vanish, so U is zero for every mass profile."""
    first, second = ambiguity_coefficients(ordering)
    if ordering.is_exact:
        return first == 0 and second == 0
    return abs(first) <= tolerance and abs(second) <= tolerance


def ambiguity_potential(
    ordering: OrderingParams,
    m: RealLike,
    m_d1: RealLike,
    m_d2: RealLike,
    hbar: float = 1.0,
) -> Any:
    """U(x) = -(hbar^2 / (4 m^3 (a+1))) [(alpha+gamma-a) m m'' + 2(a-alpha gamma-alpha-gamma) m'^2].

    Takes the mass triple at x rather than x itself so any profile can feed it.
    """
    first, second = (float(value) for value in ambiguity_coefficients(ordering))
    a_plus_one = float(ordering.a) + 1.0
    return -(hbar**2 / (4.0 * m**3 * a_plus_one)) * (first * m * m_d2 + 2.0 * second * m_d1**2)


def profile_ambiguity_potential(
    ordering: OrderingParams, profile: ExponentialProfile, x: RealLike
) -> Any:
    m, m_d1, m_d2 = profile.mass_triple(x)
    return ambiguity_potential(ordering, m, m_d1, m_d2, profile.system.hbar)


def effective_potential(ordering: OrderingParams, profile: ExponentialProfile, x: RealLike) -> Any:
    """U_eff = V + U + (hbar^2/4m) [(3/2)(m'/m)^2 - m''/m]."""
    hbar = profile.system.hbar
    m, m_d1, m_d2 = profile.mass_triple(x)
    kinetic_correction = (hbar**2 / (4.0 * m)) * (1.5 * (m_d1 / m) ** 2 - m_d2 / m)
    return (
        profile.bare_potential(x)
        + ambiguity_potential(ordering, m, m_d1, m_d2, hbar)
        + kinetic_correction
    )


def nu0_ambiguity_potential(system: SystemConfig, x: RealLike) -> Any:
    """U for any nu = 0 ordering on the exponential profile: -(hbar^2 c^2 / (8 m0)) e^{-cx}.

    This is the term the superpotential has to reproduce.
    """
    profile = ExponentialProfile(system)
    return -(system.hbar**2 * system.c**2 / 8.0) / profile.mass(x)
