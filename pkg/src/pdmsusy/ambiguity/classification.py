"""
Classification of orderings by the ordering term nu.

For preset (rational) orderings every quantity here is an exact Fraction, so the
nu^2 = 0 boundary cannot be moved by rounding.
"""

import math
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from ..core.errors import ComplexOrdering
from ..core.models import OrderingParams, Scalar, SystemConfig, as_scalar


class Classification(Enum):
    """Real orderings give a real nu; complex ones are rejected."""

    REAL = "real"
    COMPLEX = "complex"


@dataclass(frozen=True)
class AmbiguityReport:
    ordering: OrderingParams
    q_over_c2: Scalar
    nu_squared: Scalar

    @property
    def classification(self) -> Classification:
        return Classification.COMPLEX if self.nu_squared < 0 else Classification.REAL

    @property
    def is_real(self) -> bool:
        return self.classification is Classification.REAL

    @property
    def nu(self) -> float | None:
        """Non-negative nu, or None for complex orderings."""
        if not self.is_real:
            return None
        return _exact_sqrt(self.nu_squared)

    def q(self, system: SystemConfig) -> float:
        return float(self.q_over_c2) * system.c**2

    def require_real(self) -> float:
        """Return nu, raising ComplexOrdering for complex orderings."""
        nu = self.nu
        if nu is None:
            raise ComplexOrdering(
                f"complex nu (nu^2 = {self.nu_squared}): physically unacceptable ordering",
                nu_squared=float(self.nu_squared),
            )
        return nu

    def to_dict(self) -> dict[str, Any]:
        return {
            **self.ordering.to_dict(),
            "q_over_c2": _render(self.q_over_c2),
            "nu_squared": _render(self.nu_squared),
            "nu": self.nu,
            "classification": self.classification.value,
        }


def _exact_sqrt(value: Scalar) -> float:
    if isinstance(value, Fraction):
        num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
        if num * num == value.numerator and den * den == value.denominator:
            return num / den
    return math.sqrt(value)


def _render(value: Scalar) -> str | float:
    return str(value) if isinstance(value, Fraction) else value


def q_over_c2(ordering: OrderingParams) -> Scalar:
    """(a - 2 alpha gamma - alpha - gamma) / (4 (a+1))."""
    a, alpha, _, gamma = ordering.as_tuple()
    return (a - 2 * alpha * gamma - alpha - gamma) / (4 * (a + 1))


def q_value(ordering: OrderingParams, system: SystemConfig) -> float:
    return float(q_over_c2(ordering)) * system.c**2


def nu_value(ordering: OrderingParams) -> AmbiguityReport:
    """nu^2 = 1 - 2 (a - 2 alpha gamma - alpha - gamma)/(a+1), which equals 1 - 8 q / c^2."""
    ratio = q_over_c2(ordering)
    return AmbiguityReport(ordering=ordering, q_over_c2=ratio, nu_squared=1 - 8 * ratio)


def ambiguity_free_orderings(a: Any) -> tuple[OrderingParams, OrderingParams]:
    """The two families that remove U for every profile.

    They are (alpha=0, gamma=a) and (alpha=a, gamma=0).
    """
    a_s = as_scalar(a)
    zero = Fraction(0) if isinstance(a_s, Fraction) else 0.0
    return (
        OrderingParams(a_s, zero, -1 - a_s, a_s),
        OrderingParams(a_s, a_s, -1 - a_s, zero),
    )


def equivalence_classes(orderings: Iterable[OrderingParams]) -> list[list[OrderingParams]]:
    """Group orderings with equal q/c^2; members share U_eff on the exponential profile.

    Classes keep first-seen order; floats are compared exactly.
    """
    classes: dict[Scalar, list[OrderingParams]] = {}
    for ordering in orderings:
        classes.setdefault(q_over_c2(ordering), []).append(ordering)
    return list(classes.values())
