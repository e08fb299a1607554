"""Tests for the CSV and JSON writers."""

import json
import math
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from pdmsusy.core.errors import ExportError
from pdmsusy.utils.export import (
    format_cell,
    read_csv,
    read_json,
    render_csv,
    render_json,
    write_array,
    write_csv,
    write_json,
)


class TestFormatCell:
    @pytest.mark.parametrize(
        "value, text",
        [(None, ""), (True, "true"), (0.1, "0.1"), (np.float64(1e-300), "1e-300"), (Fraction(-3, 4), "-3/4"), (7, "7")],
    )
    def test_cells(self, value, text: str) -> None:
        assert format_cell(value) == text


class TestCsv:
    def test_header_and_metadata_are_comments(self) -> None:
        text = render_csv(["x", "y"], [[1.0, 2.0]], metadata={"ordering": "weyl"})
        assert text.splitlines() == ["# ordering: weyl", "# x,y", "1.0,2.0"]

    def test_round_trip(self, tmp_path: Path) -> None:
        rows = [[0.1, Fraction(-1, 2), "COMPLEX", None], [1e-17, Fraction(0), "ok", 3.141592653589793]]
        path = write_csv(tmp_path / "out" / "sweep.csv", ["a", "b", "status", "E0"], rows, metadata={"seed": 1})
        metadata, columns, parsed = read_csv(path)
        assert metadata == {"seed": "1"}
        assert columns == ["a", "b", "status", "E0"]
        assert parsed == [[0.1, Fraction(-1, 2), "COMPLEX", None], [1e-17, 0, "ok", 3.141592653589793]]

    def test_whitespace_delimiter_marks_missing(self, tmp_path: Path) -> None:
        path = write_csv(tmp_path / "sweep.dat", ["a", "E0"], [[1.0, None]], delimiter=" ")
        assert path.read_text().splitlines()[-1] == "1.0 ?"
        _, columns, rows = read_csv(path, delimiter=" ")
        assert columns == ["a", "E0"]
        assert rows == [[1.0, None]]

    def test_cells_containing_the_delimiter_are_quoted(self, tmp_path: Path) -> None:
        rows = [["0,-1/2,0,-1/2", 1.0, True], ["needs at least 3 points, has 2", Fraction(1, 8), False]]
        path = write_csv(tmp_path / "report.csv", ["ordering", "value", "flag"], rows)
        assert path.read_text().splitlines()[1] == '"0,-1/2,0,-1/2",1.0,true'
        _, _, parsed = read_csv(path)
        assert parsed == rows

    def test_whitespace_cells_are_quoted(self, tmp_path: Path) -> None:
        rows = [["Li Kuhn", 2.5]]
        path = write_csv(tmp_path / "labels.dat", ["name", "E0"], rows, delimiter=" ")
        _, _, parsed = read_csv(path, delimiter=" ")
        assert parsed == rows

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(ExportError):
            read_csv(tmp_path / "missing.csv")

    def test_unwritable_path(self, tmp_path: Path) -> None:
        blocker = tmp_path / "file"
        blocker.write_text("x")
        with pytest.raises(ExportError) as exc_info:
            write_csv(blocker / "out.csv", ["x"], [[1.0]])
        assert exc_info.value.path == blocker / "out.csv"


class TestJson:
    def test_metadata_first_and_no_nan(self) -> None:
        document = json.loads(
            render_json({"levels": [1.0, math.nan], "q": Fraction(1, 8), "arr": np.arange(2)}, "0.1.0", seed=5)
        )
        assert list(document)[:3] == ["schema", "version", "seed"]
        assert document["levels"] == [1.0, None]
        assert document["q"] == "1/8"
        assert document["arr"] == [0, 1]

    def test_deterministic(self) -> None:
        payload = {"a": 1.0, "b": [0.1, 0.2]}
        assert render_json(payload, "1") == render_json(payload, "1")

    def test_round_trip(self, tmp_path: Path) -> None:
        path = write_json(tmp_path / "report.json", {"levels": [1.0000000000000002]}, "0.1.0")
        assert read_json(path)["levels"] == [1.0000000000000002]

    def test_invalid_json(self, tmp_path: Path) -> None:
        path = tmp_path / "broken.json"
        path.write_text("{")
        with pytest.raises(ExportError):
            read_json(path)


class TestArray:
    def test_float_table_round_trips_exactly(self, tmp_path: Path) -> None:
        rng = np.random.default_rng(7)
        data = np.column_stack([np.linspace(-36.0, 8.0, 5), rng.standard_normal(5) * 1e-300, np.exp(rng.uniform(-30, 30, 5))])
        path = write_array(tmp_path / "dump" / "susy.csv", ["x", "tiny", "huge"], data, metadata={"grid": "-36.0:8.0:5"})
        metadata, columns, rows = read_csv(path)
        assert metadata == {"grid": "-36.0:8.0:5"}
        assert columns == ["x", "tiny", "huge"]
        np.testing.assert_array_equal(np.array(rows, dtype=np.float64), data)

    def test_whitespace_delimiter(self, tmp_path: Path) -> None:
        data = np.array([[0.1, 1.0 / 3.0]])
        path = write_array(tmp_path / "susy.dat", ["x", "V"], data, delimiter=" ")
        assert path.read_text().splitlines()[0] == "# x V"
        _, _, rows = read_csv(path, delimiter=" ")
        assert rows == [[0.1, 1.0 / 3.0]]

    def test_unwritable_path(self, tmp_path: Path) -> None:
        blocker = tmp_path / "file"
        blocker.write_text("x")
        with pytest.raises(ExportError):
            write_array(blocker / "susy.csv", ["x"], np.zeros((1, 1)))
