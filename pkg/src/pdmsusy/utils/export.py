"""
CSV and JSON writers whose output reads back to the same values.

Floats are written with repr (shortest round-tripping form) and Fractions as "p/q".
CSV files are gnuplot-friendly: metadata and the column header are '#' comment lines.
Cells are quoted by the csv module when they contain the delimiter.
"""

import csv
import io
import json
import math
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np
from numpy.typing import NDArray

from ..core.constants import JSON_SCHEMA_VERSION
from ..core.errors import ExportError

# gnuplot: set datafile missing "?"
MISSING_WHITESPACE = "?"
# 17 significant digits round-trip every double
FLOAT_FORMAT = "%.17g"


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float | np.floating):
        return repr(float(value))
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


def parse_cell(text: str) -> Any:
    """Inverse of format_cell: None, bool, int, Fraction ("p/q"), float, or the text itself."""
    text = text.strip()
    if text in ("", MISSING_WHITESPACE):
        return None
    if text in ("true", "false"):
        return text == "true"
    try:
        return int(text)
    except ValueError:
        pass
    if "/" in text:
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            return text
    try:
        return float(text)
    except ValueError:
        return text


def _header_lines(
    columns: Sequence[str], delimiter: str, metadata: dict[str, Any] | None
) -> list[str]:
    lines = [f"{key}: {format_cell(value)}" for key, value in (metadata or {}).items()]
    lines.append(delimiter.join(columns))
    return lines


def render_csv(
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
    delimiter: str = ",",
    metadata: dict[str, Any] | None = None,
) -> str:
    missing = "" if delimiter.strip() else MISSING_WHITESPACE
    buffer = io.StringIO()
    for line in _header_lines(columns, delimiter, metadata):
        buffer.write(f"# {line}\n")
    writer = csv.writer(buffer, delimiter=delimiter, lineterminator="\n")
    writer.writerows([format_cell(cell) or missing for cell in row] for row in rows)
    return buffer.getvalue()


def _target(path: str | Path) -> Path:
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ExportError(target, e.strerror or str(e)) from e
    return target


def write_text(path: str | Path, text: str) -> Path:
    """Write ``text`` to ``path``, creating parent directories.

    Raises:
        ExportError: If the file cannot be written
    """
    target = _target(path)
    try:
        target.write_text(text, encoding="utf-8")
    except OSError as e:
        raise ExportError(target, e.strerror or str(e)) from e
    return target


def write_csv(
    path: str | Path,
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
    delimiter: str = ",",
    metadata: dict[str, Any] | None = None,
) -> Path:
    return write_text(path, render_csv(columns, rows, delimiter, metadata))


def write_array(
    path: str | Path,
    columns: Sequence[str],
    data: NDArray[np.float64],
    delimiter: str = ",",
    metadata: dict[str, Any] | None = None,
) -> Path:
    """Write an all-float table with np.savetxt; read it back with read_csv.

    Raises:
        ExportError: If the file cannot be written
    """
    target = _target(path)
    header = "\n".join(_header_lines(columns, delimiter, metadata))
    try:
        np.savetxt(
            target, data, fmt=FLOAT_FORMAT, delimiter=delimiter, header=header, comments="# "
        )
    except OSError as e:
        raise ExportError(target, e.strerror or str(e)) from e
    return target


def read_csv(
    path: str | Path, delimiter: str = ","
) -> tuple[dict[str, str], list[str], list[list[Any]]]:
    """Read a file written by write_csv or write_array.

    Returns:
        (metadata, columns, rows) with numeric cells parsed back to their values
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ExportError(path, e.strerror or str(e)) from e

    lines = text.splitlines()
    comments = [line[2:] for line in lines if line.startswith("# ")]
    data = [line for line in lines if line and not line.startswith("#")]
    if not comments:
        raise ExportError(path, "missing '#' column header")
    metadata = dict(line.split(": ", 1) for line in comments[:-1] if ": " in line)
    columns = comments[-1].split(delimiter)
    reader = csv.reader(data, delimiter=delimiter, skipinitialspace=not delimiter.strip())
    rows = [[parse_cell(cell) for cell in record] for record in reader]
    return metadata, columns, rows


def _default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def _sanitize(obj: Any) -> Any:
    # JSON has no NaN or Infinity
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {key: _sanitize(value) for key, value in obj.items()}
    if isinstance(obj, list | tuple):
        return [_sanitize(value) for value in obj]
    return obj


def render_json(payload: dict[str, Any], version: str, seed: int | None = None) -> str:
    """Serialize with schema/version/seed metadata first; no timestamps."""
    document: dict[str, Any] = {"schema": JSON_SCHEMA_VERSION, "version": version}
    if seed is not None:
        document["seed"] = seed
    document.update(payload)
    normalized = json.loads(json.dumps(document, default=_default))
    return json.dumps(_sanitize(normalized), indent=2, allow_nan=False) + "\n"


def write_json(
    path: str | Path, payload: dict[str, Any], version: str, seed: int | None = None
) -> Path:
    return write_text(path, render_json(payload, version, seed))


def read_json(path: str | Path) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except OSError as e:
        raise ExportError(path, e.strerror or str(e)) from e
    except json.JSONDecodeError as e:
        raise ExportError(path, f"invalid JSON: {e}") from e
