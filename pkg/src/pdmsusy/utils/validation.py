"""
Parsing and validation of command-line parameter specs.
"""

from fractions import Fraction

from ..core.constants import PRESET_TABLE
from ..core.errors import InvalidGrid, ValidationError
from ..core.models import OrderingParams, Scalar, as_scalar
from ..core.ordering import make_ordering, preset
from ..massmodel.grid import Grid

SWEEP_PARAMETERS = ("V0", "c", "m0", "a", "alpha", "gamma")


class ParameterValidator:
    """Validator for PdmSusy command-line parameters."""

    @staticmethod
    def parse_grid(spec: str) -> Grid:
        """Parse "xmin:xmax:n" into a Grid.

        Raises:
            InvalidGrid: If the spec is malformed or describes an invalid grid
        """
        parts = spec.split(":")
        if len(parts) != 3:
            raise InvalidGrid(f"Grid must look like xmin:xmax:n, got {spec!r}")
        try:
            x_min, x_max, n = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as e:
            raise InvalidGrid(f"Invalid grid spec {spec!r}: {e}") from e
        return Grid(x_min, x_max, n)

    @staticmethod
    def parse_range(spec: str) -> list[Scalar]:
        """Parse "start:stop:count" into evenly spaced values, stop included.

        Rational end points ("-1", "1/2") give exact Fractions, so a sign change of
        nu^2 lands exactly on a sample.
        """
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValidationError(f"Range must look like start:stop:count, got {spec!r}")
        start, stop = as_scalar(parts[0]), as_scalar(parts[1])
        try:
            count = int(parts[2])
        except ValueError as e:
            raise ValidationError(f"Range count must be an integer, got {parts[2]!r}") from e
        if count < 1:
            raise ValidationError(f"Range count must be at least 1, got {count}")
        if count == 1:
            return [start]
        if isinstance(start, Fraction) and isinstance(stop, Fraction):
            step: Scalar = (stop - start) / (count - 1)
        else:
            start, stop = float(start), float(stop)
            step = (stop - start) / (count - 1)
        values = [start + i * step for i in range(count - 1)]
        values.append(stop)
        return values

    @staticmethod
    def parse_ordering(spec: str) -> tuple[str, OrderingParams]:
        """Resolve a preset name or an explicit "a,alpha,beta,gamma".

        Returns:
            (label, params), where label is the preset name or the spec itself
        """
        spec = spec.strip()
        if "," not in spec:
            found = preset(spec)
            return found.name, found.params
        parts = [part.strip() for part in spec.split(",")]
        if len(parts) != 4:
            raise ValidationError(
                f"Explicit ordering needs four values a,alpha,beta,gamma, got {spec!r}"
            )
        return spec, make_ordering(*parts)

    @staticmethod
    def validate_levels(levels: int) -> int:
        if levels < 1:
            raise ValidationError(f"levels must be at least 1, got {levels}")
        return levels

    @staticmethod
    def validate_sweep_parameter(name: str) -> str:
        if name not in SWEEP_PARAMETERS:
            available = ", ".join(SWEEP_PARAMETERS)
            raise ValidationError(f"Unknown sweep parameter '{name}'. Available: {available}")
        return name


def ordering_label(params: OrderingParams) -> str:
    """Preset name if ``params`` matches a preset exactly, else "a,alpha,beta,gamma"."""
    for name, values in PRESET_TABLE.items():
        if params.as_tuple() == values:
            return name
    return ",".join(str(v) for v in params.as_tuple())
