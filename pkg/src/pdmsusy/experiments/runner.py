"""
High-level runner behind the CLI commands: ordering tables, spectrum reports, SUSY
dumps and parameter sweeps.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np
from numpy.typing import NDArray

from ..ambiguity.classification import Classification, equivalence_classes, nu_value
from ..ambiguity.potential import nu0_ambiguity_potential
from ..analytic.ground_state import ground_state_closed_form
from ..analytic.morse import morse_spectrum
from ..analytic.oscillator import oscillator_spectrum
from ..analytic.spectrum import kappa
from ..core.errors import DegenerateOrdering, NoBoundStates, ValidationError
from ..core.models import OrderingParams, Scalar, SystemConfig
from ..core.ordering import list_presets, ordering_from_free_parameters
from ..massmodel.grid import Grid
from ..massmodel.profile import ExponentialProfile
from ..numerics.solver import SolverOptions, solve_spectrum
from ..susy.partners import identity_residuals, partner_potential_1, partner_potential_2
from ..susy.superpotential import solve_superpotential, superpotential_value
from ..utils.logger import JSONLinesLogger
from ..utils.validation import ordering_label

logger = logging.getLogger(__name__)

COMPLEX_FLAG = "COMPLEX"


@dataclass
class SweepRow:
    value: Scalar
    status: str
    nu_squared: Scalar | None
    nu: float | None
    kappa: float | None
    levels: list[float]


class ExperimentRunner:
    """Runs one command's computation and returns plain data for output."""

    def __init__(
        self,
        system: SystemConfig,
        ordering: OrderingParams,
        grid: Grid | None = None,
        options: SolverOptions | None = None,
        logger: JSONLinesLogger | None = None,
        run_id: str = "run",
    ):
        """Initialize the runner.

        Args:
            system: Physical constants and profile parameters
            ordering: Ordering used by spectrum, SUSY and sweep runs
            grid: Grid for numeric work (required by numeric spectra and SUSY dumps)
            options: Solver options (defaults if None)
            logger: Optional JSON Lines logger for run events
            run_id: Identifier attached to every logged event
        """
        self.system = system
        self.ordering = ordering
        self.grid = grid
        self.options = options or SolverOptions()
        self.logger = logger
        self.run_id = run_id

    @property
    def label(self) -> str:
        return ordering_label(self.ordering)

    def _require_grid(self) -> Grid:
        if self.grid is None:
            raise ValidationError("This run needs a grid")
        return self.grid

    def orderings_table(self) -> list[dict[str, Any]]:
        """One row per preset: parameters, q/c^2, nu^2, nu (or COMPLEX), equivalence class."""
        presets = list_presets()
        classes = equivalence_classes(p.params for p in presets)
        class_of = {
            ordering: index + 1 for index, members in enumerate(classes) for ordering in members
        }

        rows: list[dict[str, Any]] = []
        for entry in presets:
            report = nu_value(entry.params)
            a, alpha, beta, gamma = entry.params.as_tuple()
            rows.append(
                {
                    "name": entry.name,
                    "a": a,
                    "alpha": alpha,
                    "beta": beta,
                    "gamma": gamma,
                    "q_over_c2": report.q_over_c2,
                    "nu_squared": report.nu_squared,
                    "nu": report.nu if report.is_real else COMPLEX_FLAG,
                    "class": class_of[entry.params],
                }
            )
        return rows

    def spectrum_report(self, levels: int, numeric: bool = False) -> dict[str, Any]:
        """Analytic levels by both routes and, optionally, numeric levels.

        Raises:
            ComplexOrdering: If the ordering has complex nu
        """
        morse = morse_spectrum(self.system, self.ordering, levels - 1)
        oscillator = oscillator_spectrum(self.system, self.ordering, levels - 1)
        self._log_spectrum("morse", morse.energies)
        self._log_spectrum("oscillator", oscillator.energies)

        rows: list[dict[str, Any]] = [
            {"n": m.n, "morse": m.energy, "oscillator": o.energy}
            for m, o in zip(morse.levels, oscillator.levels, strict=True)
        ]
        report: dict[str, Any] = {
            "ordering": self.label,
            "parameters": self.ordering.to_dict(),
            "system": self.system.to_dict(),
            "nu": morse.nu,
            "kappa": morse.kappa,
            "route_agreement": max(
                abs(m - o) / abs(m)
                for m, o in zip(morse.energies, oscillator.energies, strict=True)
            ),
        }

        if numeric:
            grid = self._require_grid()
            spectrum = solve_spectrum(self.system, self.ordering, grid, levels, self.options)
            self._log_spectrum("numeric", spectrum.energies)
            for row, level in zip(rows, spectrum.levels, strict=True):
                row["numeric"] = level.energy
                row["error_estimate"] = level.error_estimate
                row["deviation"] = abs(level.energy - row["morse"]) / abs(row["morse"])
            report["grid"] = grid.to_spec()
            report["grid_report"] = spectrum.grid_report.to_dict()
            report["solver"] = self.options.to_dict()

        report["levels"] = rows
        return report

    def susy_dump(self) -> tuple[list[str], NDArray[np.float64], dict[str, Any]]:
        """Columns x, m, V, U_nu0, W, V1, V2, psi0 on the grid, plus a summary.

        Raises:
            NoBoundStates: If V0 <= 0
            DomainTooSmall: If psi0 does not decay inside the grid
        """
        grid = self._require_grid()
        sp = solve_superpotential(self.system)
        x = grid.points
        profile = ExponentialProfile(self.system)

        columns = ["x", "m", "V", "U_nu0", "W", "V1", "V2", "psi0"]
        data = np.column_stack(
            [
                x,
                profile.mass(x),
                profile.bare_potential(x),
                nu0_ambiguity_potential(self.system, x),
                superpotential_value(sp, self.system, x),
                partner_potential_1(sp, self.system, x),
                partner_potential_2(sp, self.system, x),
                ground_state_closed_form(self.system, grid).values,
            ]
        )
        residuals = identity_residuals(sp, self.system, x)
        summary = {
            **sp.to_dict(),
            "analytic_ground_level": kappa(self.system),
            "system": self.system.to_dict(),
            "grid": grid.to_spec(),
            "identity_residuals": residuals.to_dict(),
        }
        return columns, data, summary

    def sweep(self, parameter: str, values: list[Scalar], levels: int) -> list[SweepRow]:
        """Analytic nu, kappa and the first ``levels`` levels for each parameter value.

        Orderings with complex nu, and systems without bound states, give flagged rows
        with no levels.
        """
        rows: list[SweepRow] = []
        for value in values:
            try:
                system, ordering = self._swept(parameter, value)
            except DegenerateOrdering:
                rows.append(SweepRow(value, "degenerate", None, None, None, []))
                continue
            except ValidationError as e:
                logger.info("Sweep value %s rejected: %s", value, e)
                rows.append(SweepRow(value, "invalid", None, None, None, []))
                continue

            report = nu_value(ordering)
            if report.classification is Classification.COMPLEX:
                rows.append(SweepRow(value, COMPLEX_FLAG, report.nu_squared, None, None, []))
                continue
            try:
                spectrum = morse_spectrum(system, ordering, levels - 1)
            except NoBoundStates:
                rows.append(
                    SweepRow(value, "no-bound-states", report.nu_squared, report.nu, None, [])
                )
                continue
            rows.append(
                SweepRow(
                    value, "ok", report.nu_squared, spectrum.nu, spectrum.kappa, spectrum.energies
                )
            )
        return rows

    def _swept(self, parameter: str, value: Scalar) -> tuple[SystemConfig, OrderingParams]:
        if parameter in ("V0", "c", "m0"):
            return self.system.scaled(**{parameter: float(value)}), self.ordering
        a, alpha, _, gamma = self.ordering.as_tuple()
        free = {"a": a, "alpha": alpha, "gamma": gamma}
        free[parameter] = value
        return self.system, ordering_from_free_parameters(free["a"], free["alpha"], free["gamma"])

    def _log_spectrum(self, route: str, levels: list[float]) -> None:
        if self.logger:
            self.logger.log_spectrum(self.run_id, self.label, route, levels)


def sweep_table(
    rows: list[SweepRow], parameter: str, levels: int
) -> tuple[list[str], list[list[Any]]]:
    """Flatten sweep rows into CSV columns; missing levels are None."""
    columns = [parameter, "status", "nu_squared", "nu", "kappa"] + [f"E{n}" for n in range(levels)]
    table: list[list[Any]] = []
    for row in rows:
        padded: list[Any] = list(row.levels) + [None] * (levels - len(row.levels))
        value = row.value if isinstance(row.value, Fraction) else float(row.value)
        table.append([value, row.status, row.nu_squared, row.nu, row.kappa, *padded])
    return columns, table
