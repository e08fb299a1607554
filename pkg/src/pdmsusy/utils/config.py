"""
Configuration management for PdmSusy.
"""

import copy
from pathlib import Path
from typing import Any

import yaml

from ..core.constants import (
    BOUNDARY_SENSITIVITY_THRESHOLD,
    BOUNDARY_SHRINK_FRACTION,
    DEFAULT_C,
    DEFAULT_GRID_POINTS,
    DEFAULT_HBAR,
    DEFAULT_LEVELS,
    DEFAULT_M0,
    DEFAULT_RELATIVE_TOLERANCE,
    DEFAULT_SEED,
    DEFAULT_V0,
    DEFAULT_X_MAX_SCALED,
    DEFAULT_X_MIN_SCALED,
    INVERSE_ITERATION_TOLERANCE,
    MAX_INVERSE_ITERATIONS,
)
from ..core.errors import ValidationError
from ..core.models import SystemConfig
from ..massmodel.grid import Grid
from ..numerics.solver import SolverOptions
from ..numerics.tridiagonal import BOUNDARY_MODES


class PdmConfig:
    """Main configuration class for PdmSusy."""

    DEFAULT_CONFIG: dict[str, Any] = {
        "system": {
            "hbar": DEFAULT_HBAR,
            "m0": DEFAULT_M0,
            "c": DEFAULT_C,
            "V0": DEFAULT_V0,
        },
        "ordering": {"preset": "zhu-kroemer"},
        "grid": {
            # domain in units of 1/|c|
            "x_min_scaled": DEFAULT_X_MIN_SCALED,
            "x_max_scaled": DEFAULT_X_MAX_SCALED,
            "n": DEFAULT_GRID_POINTS,
        },
        "solver": {
            "relative_tolerance": DEFAULT_RELATIVE_TOLERANCE,
            "max_inverse_iterations": MAX_INVERSE_ITERATIONS,
            "inverse_tolerance": INVERSE_ITERATION_TOLERANCE,
            "seed": DEFAULT_SEED,
            "workers": 1,
            "boundary_threshold": BOUNDARY_SENSITIVITY_THRESHOLD,
            "boundary_shrink_fraction": BOUNDARY_SHRINK_FRACTION,
            "boundary_mode": "asymptotic",
        },
        "output": {
            "format": "table",  # table, csv, json
            "delimiter": ",",
            "default_output_dir": "results",
        },
        "cli": {"levels": DEFAULT_LEVELS},
    }

    def __init__(self, config_file: Path | str | None = None):
        """Initialize configuration.

        Args:
            config_file: Path to config file. If None, uses default locations.
        """
        self.config: dict[str, Any] = copy.deepcopy(self.DEFAULT_CONFIG)
        self.config_file: Path | None = None

        if config_file:
            self.load_from_file(Path(config_file))
        else:
            self._load_from_default_locations()

    def _load_from_default_locations(self) -> None:
        default_locations = [
            Path.cwd() / "pdmsusy.yaml",
            Path.cwd() / "pdmsusy.yml",
            Path.cwd() / ".pdmsusy.yaml",
            Path.home() / ".pdmsusy" / "config.yaml",
            Path.home() / ".config" / "pdmsusy" / "config.yaml",
        ]

        for location in default_locations:
            if location.exists():
                try:
                    self.load_from_file(location)
                    break
                except (OSError, yaml.YAMLError, ValueError):
                    continue

    def load_from_file(self, config_file: Path) -> None:
        """Load configuration from a YAML file.

        Raises:
            FileNotFoundError: If the file does not exist
            ValueError: If the file is not valid YAML or not a mapping
        """
        if not config_file.exists():
            raise FileNotFoundError(f"Config file not found: {config_file}")

        try:
            with open(config_file, encoding="utf-8") as f:
                user_config = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in config file {config_file}: {e}") from e

        if user_config is None:
            return
        if not isinstance(user_config, dict):
            raise ValueError(f"Config file {config_file} must contain a mapping")
        self._merge_config(self.config, user_config)
        self.config_file = config_file

    def _merge_config(self, base: dict[str, Any], override: dict[str, Any]) -> None:
        """Recursively merge configuration dictionaries."""
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value

    def apply_overrides(self, section: str, values: dict[str, Any]) -> None:
        """Overwrite keys of one section, skipping None (flags that were not given)."""
        target = self.config.setdefault(section, {})
        for key, value in values.items():
            if value is not None:
                target[key] = value

    @property
    def system(self) -> dict[str, Any]:
        return self.config["system"]

    @property
    def ordering(self) -> dict[str, Any]:
        return self.config["ordering"]

    @property
    def grid(self) -> dict[str, Any]:
        return self.config["grid"]

    @property
    def solver(self) -> dict[str, Any]:
        return self.config["solver"]

    @property
    def output(self) -> dict[str, Any]:
        return self.config["output"]

    @property
    def cli(self) -> dict[str, Any]:
        return self.config["cli"]

    def create_system_config(self) -> SystemConfig:
        cfg = self.system
        return SystemConfig(hbar=cfg["hbar"], m0=cfg["m0"], c=cfg["c"], V0=cfg["V0"])

    def create_grid(self, system: SystemConfig | None = None) -> Grid:
        """Default grid for ``system``: the scaled domain divided by |c|."""
        system = system or self.create_system_config()
        cfg = self.grid
        return Grid(
            cfg["x_min_scaled"] / system.abs_c,
            cfg["x_max_scaled"] / system.abs_c,
            int(cfg["n"]),
        )

    def create_solver_options(self) -> SolverOptions:
        cfg = self.solver
        if cfg["boundary_mode"] not in BOUNDARY_MODES:
            available = ", ".join(BOUNDARY_MODES)
            raise ValidationError(
                f"Unknown boundary_mode '{cfg['boundary_mode']}'. Available: {available}"
            )
        return SolverOptions(
            relative_tolerance=float(cfg["relative_tolerance"]),
            workers=int(cfg["workers"]),
            seed=int(cfg["seed"]),
            max_inverse_iterations=int(cfg["max_inverse_iterations"]),
            inverse_tolerance=float(cfg["inverse_tolerance"]),
            boundary_threshold=float(cfg["boundary_threshold"]),
            boundary_shrink_fraction=float(cfg["boundary_shrink_fraction"]),
            boundary_mode=cfg["boundary_mode"],
        )


# Global configuration instance
_global_config: PdmConfig | None = None


def get_config() -> PdmConfig:
    """Get global configuration instance."""
    global _global_config
    if _global_config is None:
        _global_config = PdmConfig()
    return _global_config


def set_config(config: PdmConfig) -> None:
    """Set global configuration instance."""
    global _global_config
    _global_config = config
