"""Configuration, logging, console and file helpers."""

from .config import PdmConfig, get_config, set_config
from .export import read_csv, read_json, render_csv, render_json, write_array, write_csv, write_json
from .logger import JSONLinesFormatter, JSONLinesLogger
from .progress import ConsoleManager, console_manager
from .validation import SWEEP_PARAMETERS, ParameterValidator, ordering_label

__all__ = [
    "PdmConfig",
    "get_config",
    "set_config",
    "JSONLinesLogger",
    "JSONLinesFormatter",
    "ConsoleManager",
    "console_manager",
    "ParameterValidator",
    "SWEEP_PARAMETERS",
    "ordering_label",
    "render_csv",
    "write_csv",
    "write_array",
    "read_csv",
    "render_json",
    "write_json",
    "read_json",
]
