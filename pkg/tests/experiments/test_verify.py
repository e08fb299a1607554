"""Tests for the verification suite."""

import json
from fractions import Fraction

import numpy as np
import pytest

from pdmsusy.core.constants import PRESET_TABLE
from pdmsusy.core.errors import ValidationError
from pdmsusy.experiments.verify import (
    CheckResult,
    SuiteReport,
    VerificationContext,
    VerificationSuite,
    characteristic_count,
    reference_grid,
    reference_system,
)
from pdmsusy.massmodel.grid import Grid
from pdmsusy.utils.logger import JSONLinesLogger

ALGEBRA_CHECKS = [
    "classification",
    "nu-q-consistency",
    "alpha-gamma-symmetry",
    "ambiguity-free-families",
    "nu0-effective-potential",
    "mass-log-linearity",
    "route-equivalence",
    "scale-covariance",
    "nu-monotonicity",
    "epsilon-nu-link",
    "susy-identities",
    "factorization-energy",
    "w-minus-independent-of-v0",
    "intertwining",
    "sturm-counts",
    "box-self-test",
    "complex-robustness",
]


class TestRegistry:
    def test_names(self) -> None:
        names = VerificationSuite.names()
        assert len(names) == 28
        assert names[0] == "classification"
        assert set(ALGEBRA_CHECKS) <= set(names)

    def test_resolve_keeps_registration_order(self) -> None:
        assert VerificationSuite.resolve(["sturm-counts", "classification"]) == ["classification", "sturm-counts"]

    def test_resolve_unknown(self) -> None:
        with pytest.raises(ValidationError) as exc_info:
            VerificationSuite.resolve(["no-such-check"])
        assert "Unknown check: 'no-such-check'" in str(exc_info.value)


class TestSuiteReport:
    def test_status_precedence(self) -> None:
        ok = CheckResult("a", "pass")
        error = CheckResult("b", "error")
        fail = CheckResult("c", "fail")
        assert SuiteReport((ok,)).status == "pass"
        assert SuiteReport((ok, error)).status == "degraded"
        assert SuiteReport((ok, error, fail)).status == "fail"
        assert SuiteReport((ok, error, fail)).counts() == {"pass": 1, "fail": 1, "error": 1}


class TestChecks:
    @pytest.mark.parametrize("name", ALGEBRA_CHECKS)
    def test_algebra_check_passes(self, name: str) -> None:
        result = VerificationSuite.run_check(name, VerificationContext())
        assert result.status == "pass", result.detail

    def test_corrupted_preset_fails_classification(self) -> None:
        presets = dict(PRESET_TABLE)
        presets["gora-williams"] = (Fraction(0), Fraction(-1, 2), Fraction(0), Fraction(-1, 2))
        result = VerificationSuite.run_check("classification", VerificationContext(presets=presets))
        assert result.status == "fail"

    def test_coarse_grid_degrades(self) -> None:
        ctx = VerificationContext(grid=Grid(-40.0, 8.0, 16))
        report = VerificationSuite.run(ctx, ["classification", "numeric-vs-analytic"])
        assert [r.status for r in report.results] == ["pass", "error"]
        assert "GridTooCoarse" in report.results[1].message
        assert report.status == "degraded"

    def test_logs_checks_and_summary(self, tmp_path) -> None:
        log_file = tmp_path / "verify.jsonl"
        logger = JSONLinesLogger(log_file)
        seen: list[str | None] = []
        try:
            VerificationSuite.run(
                VerificationContext(), ["classification", "sturm-counts"], logger, "v1", seen.append
            )
        finally:
            logger.close()
        events = [json.loads(line) for line in log_file.read_text().splitlines()]
        assert [e["event_type"] for e in events] == ["check", "check", "run_summary"]
        assert events[-1]["summary"]["status"] == "pass"
        assert seen == ["classification", "sturm-counts"]


class TestCharacteristicCount:
    def test_two_by_two(self) -> None:
        counts = characteristic_count(np.array([2.0, 2.0]), np.array([1.0]), np.array([0.0, 2.0, 4.0]))
        np.testing.assert_array_equal(counts, [0, 1, 2])

    def test_laplacian_midpoints(self) -> None:
        n = 40
        exact = 2.0 - 2.0 * np.cos(np.arange(1, n + 1) * np.pi / (n + 1))
        midpoints = (exact[:-1] + exact[1:]) / 2
        counts = characteristic_count(np.full(n, 2.0), np.full(n - 1, -1.0), midpoints)
        np.testing.assert_array_equal(counts, np.arange(1, n))

    def test_large_minors_do_not_overflow(self) -> None:
        # unscaled minors reach 1e400 here
        n = 200
        counts = characteristic_count(np.full(n, 100.0), np.full(n - 1, 1.0), np.array([0.0, 200.0]))
        np.testing.assert_array_equal(counts, [0, n])

    def test_sturm_check_reports_both_oracles(self) -> None:
        result = VerificationSuite.run_check("sturm-counts", VerificationContext())
        assert result.detail == {"mismatches": 0, "dense_mismatches": 0}


class TestReference:
    def test_reference_system_and_grid(self) -> None:
        system = reference_system()
        grid = reference_grid(system)
        assert (grid.x_min, grid.x_max, grid.n) == (-40.0, 8.0, 8192)

    @pytest.mark.slow
    def test_full_suite_passes(self) -> None:
        report = VerificationSuite.run(VerificationContext())
        failing = [r.name for r in report.results if not r.passed]
        assert report.status == "pass", failing
