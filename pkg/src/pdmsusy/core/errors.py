"""Exception hierarchy shared by every pdmsusy package."""

from pathlib import Path


class PdmSusyError(Exception):
    """Base class for all library errors."""


class ValidationError(PdmSusyError):
    """Invalid user-supplied parameters."""


class ConstraintViolation(ValidationError):
    """Ordering parameters do not satisfy alpha + beta + gamma = -1."""


class DegenerateOrdering(ValidationError):
    """Ordering with a = -1, for which the four-term Hamiltonian is undefined."""


class UnknownPreset(ValidationError):
    """Preset name not in the ordering table."""


class InvalidSystem(ValidationError):
    """Physical constants or profile parameters out of range."""


class InvalidGrid(ValidationError):
    """Malformed grid specification."""


class ComplexOrdering(PdmSusyError):
    """Ordering whose nu^2 is negative: the spectrum would be complex."""

    def __init__(self, message: str, nu_squared: float | None = None) -> None:
        super().__init__(message)
        self.nu_squared = nu_squared


class NoBoundStates(PdmSusyError):
    """Potential strength does not confine the particle (V0 <= 0)."""


class NumericalError(PdmSusyError):
    """Base class for solver failures."""


class GridTooCoarse(NumericalError):
    """Grid has too few points or does not resolve the mass scale."""


class DomainTooSmall(NumericalError):
    """Wavefunction is not negligible at the grid ends."""


class ToleranceNotReached(NumericalError):
    """Iteration cap hit before the requested tolerance."""


class SingularShift(NumericalError):
    """Shifted matrix is singular to working precision."""


class VerificationFailed(PdmSusyError):
    """At least one verification check failed."""


class ExportError(PdmSusyError):
    """Reading or writing an output file failed."""

    def __init__(self, path: str | Path, reason: str) -> None:
        super().__init__(f"{path}: {reason}")
        self.path = Path(path)
