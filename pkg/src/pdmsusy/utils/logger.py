"""
JSON Lines logger for structured logging of runs, spectra and verification checks.
"""

import json
import logging
from datetime import datetime
from fractions import Fraction
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any

import numpy as np


class JSONLinesLogger:
    """Logger that writes one JSON object per event."""

    def __init__(
        self,
        log_file: str | Path,
        level: int = logging.INFO,
        max_file_size: int = 10 * 1024 * 1024,  # 10MB
        backup_count: int = 5,
    ):
        """Initialize the JSON Lines logger.

        Args:
            log_file: Path to the log file
            level: Logging level
            max_file_size: Maximum file size before rotation (bytes)
            backup_count: Number of backup files to keep
        """
        self.log_file = Path(log_file)
        self.level = level
        self.log_file.parent.mkdir(parents=True, exist_ok=True)

        self.logger = logging.getLogger(f"pdmsusy.jsonl.{self.log_file.stem}")
        self.logger.setLevel(level)
        self.logger.handlers.clear()

        handler = RotatingFileHandler(
            self.log_file,
            maxBytes=max_file_size,
            backupCount=backup_count,
            encoding="utf-8",
        )
        handler.setLevel(level)
        handler.setFormatter(JSONLinesFormatter())

        self.logger.addHandler(handler)
        self.logger.propagate = False

    def _emit(
        self, event_type: str, run_id: str, payload: dict[str, Any], level: int = logging.INFO
    ) -> None:
        data = {
            "event_type": event_type,
            "timestamp": datetime.now().isoformat(),
            "run_id": run_id,
            **payload,
        }
        self.logger.log(level, data)

    def log_run_start(self, run_id: str, command: str, parameters: dict[str, Any]) -> None:
        self._emit("run_start", run_id, {"command": command, "parameters": parameters})

    def log_spectrum(self, run_id: str, ordering: str, route: str, levels: list[float]) -> None:
        """Log one computed spectrum.

        Args:
            run_id: Identifier shared by all events of a run
            ordering: Preset name or explicit parameters
            route: morse, oscillator or numeric
            levels: Energies in ascending order
        """
        self._emit("spectrum", run_id, {"ordering": ordering, "route": route, "levels": levels})

    def log_check(self, run_id: str, name: str, passed: bool, detail: dict[str, Any]) -> None:
        level = logging.INFO if passed else logging.WARNING
        self._emit("check", run_id, {"name": name, "passed": passed, "detail": detail}, level)

    def log_error(self, run_id: str, error_type: str, message: str) -> None:
        self._emit(
            "error", run_id, {"error_type": error_type, "error_message": message}, logging.ERROR
        )

    def log_run_summary(self, run_id: str, summary: dict[str, Any]) -> None:
        self._emit("run_summary", run_id, {"summary": summary})

    def close(self) -> None:
        """Close the logger and all handlers."""
        for handler in self.logger.handlers:
            handler.close()
        self.logger.handlers.clear()


class JSONLinesFormatter(logging.Formatter):
    """Custom formatter for JSON Lines output."""

    def format(self, record: logging.LogRecord) -> str:
        if isinstance(record.msg, dict):
            log_data: dict[str, Any] = dict(record.msg)
        else:
            log_data = {
                "event_type": "log_message",
                "timestamp": datetime.now().isoformat(),
                "logger": record.name,
                "message": record.getMessage(),
            }

        if "level" not in log_data:
            log_data["level"] = record.levelname

        return json.dumps(log_data, default=self._json_serializer, ensure_ascii=False)

    def _json_serializer(self, obj: Any) -> Any:
        if isinstance(obj, Fraction):
            return str(obj)
        elif isinstance(obj, np.generic):
            return obj.item()
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, datetime):
            return obj.isoformat()
        elif hasattr(obj, "to_dict"):
            return obj.to_dict()
        else:
            return str(obj)
