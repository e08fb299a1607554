from functools import cache
from typing import Any

from .constants import PRESET_LABELS, PRESET_TABLE
from .errors import UnknownPreset
from .models import OrderingParams, OrderingPreset, as_scalar


def make_ordering(a: Any, alpha: Any, beta: Any, gamma: Any) -> OrderingParams:
    """Build validated ordering parameters.

    Args:
        a: Weight of the a[m^-1 p^2 + p^2 m^-1] term
        alpha: Exponent of the outer mass factor
        beta: Exponent of the middle mass factor
        gamma: Exponent of the other outer mass factor

    Returns:
        Validated OrderingParams (exact rationals when every input is rational)

    Raises:
        ConstraintViolation: If alpha + beta + gamma != -1
        DegenerateOrdering: If a = -1
    """
    return OrderingParams(a, alpha, beta, gamma)


def ordering_from_free_parameters(a: Any, alpha: Any, gamma: Any) -> OrderingParams:
    """Build an ordering with beta fixed by the constraint, beta = -1 - alpha - gamma."""
    a_s, alpha_s, gamma_s = as_scalar(a), as_scalar(alpha), as_scalar(gamma)
    return OrderingParams(a_s, alpha_s, -1 - alpha_s - gamma_s, gamma_s)


@cache
def preset(name: str) -> OrderingPreset:
    """Look up an ordering from the literature table.

    Repeated calls return the same immutable object.

    Raises:
        UnknownPreset: If the name is not in the table
    """
    if name not in PRESET_TABLE:
        available = ", ".join(PRESET_TABLE)
        raise UnknownPreset(f"Unknown ordering preset: '{name}'. Available presets: {available}")
    return OrderingPreset(
        name=name,
        params=OrderingParams(*PRESET_TABLE[name]),
        label=PRESET_LABELS.get(name, name),
    )


def list_presets() -> list[OrderingPreset]:
    """All presets in table order."""
    return [preset(name) for name in PRESET_TABLE]


def preset_names() -> list[str]:
    return list(PRESET_TABLE)
