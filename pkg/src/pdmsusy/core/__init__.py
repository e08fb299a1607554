from .errors import (
    ComplexOrdering,
    ConstraintViolation,
    DegenerateOrdering,
    DomainTooSmall,
    ExportError,
    GridTooCoarse,
    InvalidGrid,
    InvalidSystem,
    NoBoundStates,
    NumericalError,
    PdmSusyError,
    SingularShift,
    ToleranceNotReached,
    UnknownPreset,
    ValidationError,
    VerificationFailed,
)
from .models import OrderingParams, OrderingPreset, Scalar, SystemConfig
from .ordering import (
    list_presets,
    make_ordering,
    ordering_from_free_parameters,
    preset,
    preset_names,
)

__all__ = [
    "OrderingParams",
    "OrderingPreset",
    "Scalar",
    "SystemConfig",
    "make_ordering",
    "ordering_from_free_parameters",
    "preset",
    "preset_names",
    "list_presets",
    "PdmSusyError",
    "ValidationError",
    "ConstraintViolation",
    "DegenerateOrdering",
    "UnknownPreset",
    "InvalidSystem",
    "InvalidGrid",
    "ComplexOrdering",
    "NoBoundStates",
    "NumericalError",
    "GridTooCoarse",
    "DomainTooSmall",
    "ToleranceNotReached",
    "SingularShift",
    "VerificationFailed",
    "ExportError",
]
