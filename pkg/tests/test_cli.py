"""Tests for the PdmSusy command-line interface."""

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from PdmSusy import __version__
from PdmSusy.__main__ import exit_code_for, join_range_values, main
from pdmsusy.core.errors import (
    ComplexOrdering,
    ExportError,
    GridTooCoarse,
    NumericalError,
    UnknownPreset,
    VerificationFailed,
)
from pdmsusy.utils.export import read_csv, read_json

MODERATE_GRID = "-36:8:879"


@pytest.fixture
def config_file(tmp_path: Path) -> Path:
    """Empty config: every command runs on the built-in defaults."""
    path = tmp_path / "pdmsusy.yaml"
    path.write_text("output:\n  default_output_dir: " + str(tmp_path / "results") + "\n", encoding="utf-8")
    return path


def run_cli(config_file: Path, *args: str) -> None:
    main(["--quiet", "--config", str(config_file), *args])


def exit_code(config_file: Path, *args: str) -> int:
    with pytest.raises(SystemExit) as exc_info:
        run_cli(config_file, *args)
    return int(exc_info.value.code)


def test_cli_version() -> None:
    cmd = [sys.executable, "-m", "PdmSusy", "--version"]
    assert subprocess.check_output(cmd).decode().strip() == __version__


def test_no_command_prints_help(capsys: pytest.CaptureFixture[str]) -> None:
    main([])
    assert "orderings" in capsys.readouterr().out


class TestOrderings:
    def test_csv(self, config_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        run_cli(config_file, "orderings", "--format", "csv")
        out = capsys.readouterr().out
        assert "# name,a,alpha,beta,gamma,q_over_c2,nu_squared,nu,class" in out
        assert "gora-williams,0,-1,0,0,1/4,-1,COMPLEX,2" in out
        assert "weyl,1,0,-1,0,1/8,0,0.0,3" in out

    def test_json(self, config_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        run_cli(config_file, "orderings", "--format", "json")
        document = json.loads(capsys.readouterr().out)
        assert document["schema"] == 1
        assert document["version"] == __version__
        assert [row["name"] for row in document["orderings"]][:2] == ["bendaniel-duke", "gora-williams"]
        assert document["orderings"][2]["nu_squared"] == "0"

    def test_table(self, config_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        run_cli(config_file, "orderings")
        assert "Ordering presets" in capsys.readouterr().out


class TestSpectrum:
    def test_analytic_json(self, config_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        run_cli(config_file, "spectrum", "--ordering", "zhu-kroemer", "--levels", "3", "--format", "json")
        report = json.loads(capsys.readouterr().out)
        assert [row["morse"] for row in report["levels"]] == pytest.approx([1.0, 3.0, 5.0])
        assert report["nu"] == 0.0
        assert "seed" not in report

    def test_numeric_csv_file(self, config_file: Path, tmp_path: Path) -> None:
        out = tmp_path / "spectrum.csv"
        run_cli(
            config_file,
            "spectrum",
            "--ordering", "bendaniel-duke",
            "--levels", "2",
            "--numeric",
            "--grid", MODERATE_GRID,
            "--out", str(out),
        )
        metadata, columns, rows = read_csv(out)
        assert columns[:3] == ["n", "morse", "oscillator"]
        assert "numeric" in columns
        assert metadata["ordering"] == "bendaniel-duke"
        numeric = [row[columns.index("numeric")] for row in rows]
        assert numeric == pytest.approx([2.0, 4.0], rel=1e-3)

    def test_explicit_ordering_and_system_flags(self, config_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        run_cli(config_file, "spectrum", "--ordering", "0,0,-1,0", "--V0", "8", "--levels", "1", "--format", "json")
        report = json.loads(capsys.readouterr().out)
        assert report["ordering"] == "bendaniel-duke"
        assert report["levels"][0]["morse"] == pytest.approx(4.0)

    def test_weyl_levels(self, config_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        run_cli(config_file, "spectrum", "--V0", "2", "--c", "1", "--ordering", "weyl", "--levels", "4", "--format", "json")
        report = json.loads(capsys.readouterr().out)
        assert [row["morse"] for row in report["levels"]] == pytest.approx([1.0, 3.0, 5.0, 7.0])

    def test_grid_with_equals_sign(self, config_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        run_cli(config_file, "spectrum", "--levels", "1", "--numeric", f"--grid={MODERATE_GRID}", "--format", "json")
        report = json.loads(capsys.readouterr().out)
        assert report["grid"] == "-36.0:8.0:879"

    def test_complex_ordering_exits_3(self, config_file: Path) -> None:
        assert exit_code(config_file, "spectrum", "--ordering", "gora-williams") == 3

    @pytest.mark.parametrize(
        "args",
        [
            ["--V0", "-1"],
            ["--ordering", "0,0,0,0"],
            ["--ordering", "kroemer"],
            ["--levels", "0"],
            ["--numeric", "--grid", "-40:8:16"],
            ["--numeric", "--grid", "-40:8"],
        ],
    )
    def test_usage_errors_exit_2(self, config_file: Path, args: list[str]) -> None:
        assert exit_code(config_file, "spectrum", *args) == 2

    def test_unwritable_output_exits_5(self, config_file: Path, tmp_path: Path) -> None:
        blocker = tmp_path / "file"
        blocker.write_text("x")
        assert exit_code(config_file, "spectrum", "--format", "csv", "--out", str(blocker / "out.csv")) == 5

    def test_log_file(self, config_file: Path, tmp_path: Path) -> None:
        log_file = tmp_path / "run.jsonl"
        main(["--quiet", "--config", str(config_file), "--log-file", str(log_file), "spectrum", "--format", "json"])
        events = [json.loads(line) for line in log_file.read_text().splitlines()]
        assert events[0]["event_type"] == "run_start"
        assert events[0]["command"] == "spectrum"
        assert {e["route"] for e in events if e["event_type"] == "spectrum"} == {"morse", "oscillator"}

    def test_logs_errors(self, config_file: Path, tmp_path: Path) -> None:
        log_file = tmp_path / "run.jsonl"
        with pytest.raises(SystemExit):
            main(["--quiet", "--config", str(config_file), "--log-file", str(log_file), "spectrum", "--ordering", "gora-williams"])
        events = [json.loads(line) for line in log_file.read_text().splitlines()]
        assert events[-1]["event_type"] == "error"
        assert events[-1]["error_type"] == "ComplexOrdering"


class TestSweep:
    def test_flags_complex_rows(self, config_file: Path, tmp_path: Path) -> None:
        out = tmp_path / "sweep.csv"
        run_cli(
            config_file,
            "sweep",
            "--param", "alpha",
            "--range", "-1:0:5",
            "--ordering", "bendaniel-duke",
            "--levels", "2",
            "--out", str(out),
        )
        _, columns, rows = read_csv(out)
        assert columns == ["alpha", "status", "nu_squared", "nu", "kappa", "E0", "E1"]
        assert [row[1] for row in rows] == ["COMPLEX", "COMPLEX", "ok", "ok", "ok"]
        assert [row[0] for row in rows] == [-1, Fraction(-3, 4), Fraction(-1, 2), Fraction(-1, 4), 0]
        assert rows[0][-2:] == [None, None]
        assert rows[-1][-2:] == pytest.approx([2.0, 4.0])

    def test_whitespace_delimiter(self, config_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        run_cli(config_file, "sweep", "--param", "alpha", "--range", "-1:0:2", "--ordering", "bendaniel-duke",
                "--levels", "1", "--delimiter", " ")
        lines = [line for line in capsys.readouterr().out.splitlines() if line and not line.startswith("#")]
        assert lines[0].split() == ["-1", "COMPLEX", "-1", "?", "?", "?"]

    def test_unknown_parameter_exits_2(self, config_file: Path) -> None:
        assert exit_code(config_file, "sweep", "--param", "beta", "--range", "0:1:2") == 2


class TestSusy:
    def test_writes_csv_and_json(self, config_file: Path, tmp_path: Path) -> None:
        out = tmp_path / "dump" / "susy.csv"
        run_cli(config_file, "susy", "--grid", MODERATE_GRID, "--out", str(out))
        _, columns, rows = read_csv(out)
        assert columns == ["x", "m", "V", "U_nu0", "W", "V1", "V2", "psi0"]
        assert len(rows) == 879
        summary = read_json(out.with_suffix(".json"))
        assert summary["E0"] == pytest.approx(1.0)
        assert summary["command"] == "susy"

    def test_default_output_dir(self, config_file: Path, tmp_path: Path) -> None:
        run_cli(config_file, "susy", "--grid", MODERATE_GRID)
        assert (tmp_path / "results" / "susy.csv").exists()
        assert (tmp_path / "results" / "susy.json").exists()

    def test_domain_too_small_exits_2(self, config_file: Path) -> None:
        assert exit_code(config_file, "susy", "--grid", "-5:8:200") == 2


class TestVerify:
    def test_selected_checks_pass(self, config_file: Path, tmp_path: Path) -> None:
        out = tmp_path / "verify.json"
        run_cli(config_file, "verify", "--check", "classification", "--check", "sturm-counts",
                "--format", "json", "--out", str(out))
        report = read_json(out)
        assert report["status"] == "pass"
        assert [c["name"] for c in report["checks"]] == ["classification", "sturm-counts"]

    def test_degraded_exits_4(self, config_file: Path) -> None:
        assert exit_code(config_file, "verify", "--grid", "-40:8:16", "--check", "numeric-vs-analytic") == 4

    def test_unknown_check_exits_2(self, config_file: Path) -> None:
        assert exit_code(config_file, "verify", "--check", "nope") == 2


class TestJoinRangeValues:
    def test_negative_specs_are_attached(self) -> None:
        argv = ["sweep", "--param", "alpha", "--range", "-1:0:5", "--grid", "-36:8:879"]
        assert join_range_values(argv) == ["sweep", "--param", "alpha", "--range=-1:0:5", "--grid=-36:8:879"]

    def test_other_tokens_untouched(self) -> None:
        argv = ["spectrum", "--grid", "0:8:100", "--V0", "-1", "--grid"]
        assert join_range_values(argv) == argv


def test_missing_config_exits_2(tmp_path: Path) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["--quiet", "--config", str(tmp_path / "missing.yaml"), "orderings"])
    assert exc_info.value.code == 2


@pytest.mark.parametrize(
    "error, code",
    [
        (ComplexOrdering("complex"), 3),
        (VerificationFailed("fail"), 4),
        (ExportError("out.csv", "denied"), 5),
        (UnknownPreset("x"), 2),
        (GridTooCoarse("coarse"), 2),
        (ValueError("bad yaml"), 2),
        (NumericalError("stuck"), 1),
        (RuntimeError("bug"), 1),
    ],
)
def test_exit_code_for(error: Exception, code: int) -> None:
    assert exit_code_for(error) == code
