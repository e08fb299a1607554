"""Run orchestration behind the command-line interface."""

from .runner import COMPLEX_FLAG, ExperimentRunner, SweepRow, sweep_table
from .verify import (
    CheckResult,
    SuiteReport,
    VerificationContext,
    VerificationSuite,
    reference_grid,
    reference_system,
)

__all__ = [
    "ExperimentRunner",
    "SweepRow",
    "sweep_table",
    "COMPLEX_FLAG",
    "VerificationSuite",
    "VerificationContext",
    "CheckResult",
    "SuiteReport",
    "reference_system",
    "reference_grid",
]
