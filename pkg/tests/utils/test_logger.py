"""Tests for the JSON Lines logger."""

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from pdmsusy.utils.logger import JSONLinesLogger


def _events(path: Path) -> list[dict]:
    return [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]


class TestJSONLinesLogger:
    def test_event_types(self, tmp_path: Path) -> None:
        log_file = tmp_path / "logs" / "run.jsonl"
        logger = JSONLinesLogger(log_file)
        try:
            logger.log_run_start("r1", "spectrum", {"levels": 4})
            logger.log_spectrum("r1", "zhu-kroemer", "morse", [1.0, 3.0])
            logger.log_check("r1", "classification", False, {"nu_squared": Fraction(-1)})
            logger.log_error("r1", "ComplexOrdering", "complex nu")
            logger.log_run_summary("r1", {"status": "fail"})
        finally:
            logger.close()

        events = _events(log_file)
        assert [e["event_type"] for e in events] == ["run_start", "spectrum", "check", "error", "run_summary"]
        assert events[2]["level"] == "WARNING"
        assert events[2]["detail"]["nu_squared"] == "-1"
        assert events[3]["level"] == "ERROR"
        assert all(e["run_id"] == "r1" for e in events)

    def test_numpy_values(self, tmp_path: Path) -> None:
        log_file = tmp_path / "run.jsonl"
        logger = JSONLinesLogger(log_file)
        try:
            logger.log_spectrum("r2", "weyl", "numeric", np.array([1.0, 3.0]))  # type: ignore[arg-type]
        finally:
            logger.close()
        assert _events(log_file)[0]["levels"] == [1.0, 3.0]

    def test_checks_keep_run_ids(self, tmp_path: Path) -> None:
        log_file = tmp_path / "verify.jsonl"
        logger = JSONLinesLogger(log_file)
        try:
            logger.log_check("v1", "classification", True, {})
            logger.log_check("v1", "sturm-counts", False, {})
            logger.log_check("v2", "classification", True, {})
        finally:
            logger.close()

        failed = [e["name"] for e in _events(log_file) if e["run_id"] == "v1" and not e["passed"]]
        assert failed == ["sturm-counts"]
