import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .constants import CONSTRAINT_TOLERANCE, DEFAULT_C, DEFAULT_HBAR, DEFAULT_M0, DEFAULT_V0
from .errors import ConstraintViolation, DegenerateOrdering, InvalidSystem, ValidationError

Scalar = Fraction | float


def as_scalar(value: Any) -> Scalar:
    """Coerce a parameter to an exact rational when possible.

    Integers, Fractions and rational strings ("-1/2") stay exact; floats stay floats.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValidationError("Boolean is not a valid ordering parameter")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"Invalid rational parameter: {value!r}") from e
    try:
        number = float(value)
    except (TypeError, ValueError) as e:
        raise ValidationError(f"Invalid ordering parameter: {value!r}") from e
    if not math.isfinite(number):
        raise ValidationError(f"Ordering parameter must be finite, got {value!r}")
    return number


@dataclass(frozen=True)
class OrderingParams:
    """Ambiguity parameters (a, alpha, beta, gamma) of the four-term Hamiltonian."""

    a: Scalar
    alpha: Scalar
    beta: Scalar
    gamma: Scalar

    def __post_init__(self) -> None:
        for name in ("a", "alpha", "beta", "gamma"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

        total = self.alpha + self.beta + self.gamma + 1
        if self.is_exact:
            if total != 0:
                raise ConstraintViolation(
                    f"alpha + beta + gamma must equal -1, got {total - 1}"
                )
        elif abs(total) > CONSTRAINT_TOLERANCE:
            raise ConstraintViolation(
                f"alpha + beta + gamma must equal -1 (within {CONSTRAINT_TOLERANCE}), "
                f"got {float(total) - 1:.17g}"
            )

        if self.a == -1:
            raise DegenerateOrdering("a = -1 makes the prefactor 1/(4(a+1)) infinite")

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.as_tuple())

    def as_tuple(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a, self.alpha, self.beta, self.gamma)

    def to_dict(self) -> dict[str, str | float]:
        return {
            name: str(value) if isinstance(value, Fraction) else value
            for name, value in zip(("a", "alpha", "beta", "gamma"), self.as_tuple(), strict=True)
        }


@dataclass(frozen=True)
class OrderingPreset:
    name: str
    params: OrderingParams
    label: str = ""


@dataclass(frozen=True)
class SystemConfig:
    """Physical constants and exponential-profile parameters.

    m(x) = m0 e^{cx} and V(x) = V0 e^{cx}. V0 may be non-positive here; operations that
    need bound states raise NoBoundStates.
    """

    hbar: float = DEFAULT_HBAR
    m0: float = DEFAULT_M0
    c: float = DEFAULT_C
    V0: float = DEFAULT_V0

    def __post_init__(self) -> None:
        for name in ("hbar", "m0", "c", "V0"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InvalidSystem(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)

        if self.hbar <= 0:
            raise InvalidSystem(f"hbar must be positive, got {self.hbar}")
        if self.m0 <= 0:
            raise InvalidSystem(f"m0 must be positive, got {self.m0}")
        if self.c == 0:
            raise InvalidSystem("c must be nonzero (c = 0 is the constant-mass limit)")

    @property
    def abs_c(self) -> float:
        return abs(self.c)

    @property
    def has_bound_states(self) -> bool:
        return self.V0 > 0

    def scaled(self, **changes: float) -> "SystemConfig":
        """Copy with some fields replaced."""
        values = {"hbar": self.hbar, "m0": self.m0, "c": self.c, "V0": self.V0}
        values.update(changes)
        return SystemConfig(**values)

    def to_dict(self) -> dict[str, float]:
        return {"hbar": self.hbar, "m0": self.m0, "c": self.c, "V0": self.V0}
