"""Interface for ``python -m PdmSusy``."""

import sys
from argparse import ArgumentParser, Namespace
from collections.abc import Callable, Sequence
from datetime import datetime
from pathlib import Path
from typing import Any

from . import __version__

__all__ = ["main", "exit_code_for"]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_COMPLEX = 3
EXIT_VERIFICATION = 4
EXIT_IO = 5

RANGE_FLAGS = ("--grid", "--range")


def _add_system_flags(parser: ArgumentParser) -> None:
    parser.add_argument("--hbar", type=float, help="Reduced Planck constant (default: from config)")
    parser.add_argument("--m0", type=float, help="Mass scale m0 of m(x) = m0 e^{cx}")
    parser.add_argument("--c", type=float, help="Exponent c of the mass and potential profile")
    parser.add_argument("--V0", type=float, help="Potential strength V0 of V(x) = V0 e^{cx}")


def _add_ordering_flag(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--ordering",
        type=str,
        help="Preset name (e.g. 'zhu-kroemer', 'bendaniel-duke') or explicit 'a,alpha,beta,gamma'",
    )


def _add_output_flags(parser: ArgumentParser, default_format: str | None = None) -> None:
    parser.add_argument(
        "--format",
        type=str,
        choices=["table", "csv", "json"],
        default=default_format,
        help="Output format (default: from config); table output to a file is written as CSV",
    )
    parser.add_argument("--out", type=str, help="Write output to this file instead of stdout")
    parser.add_argument("--delimiter", type=str, help="CSV delimiter, ',' or ' ' (default: from config)")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="PdmSusy",
        description="PdmSusy - ordering ambiguity, exact spectra and SUSY partners of "
        "position-dependent-mass Hamiltonians",
    )
    parser.add_argument(
        "-v",
        "--version",
        action="version",
        version=__version__,
    )
    parser.add_argument("--config", type=str, help="YAML configuration file")
    parser.add_argument("--log-file", type=str, help="Write JSON Lines run events to this file")
    parser.add_argument("--quiet", "-q", action="store_true", help="Reduce output verbosity")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Orderings command
    orderings_parser = subparsers.add_parser("orderings", help="Classify the preset orderings")
    _add_output_flags(orderings_parser)

    # Spectrum command
    spectrum_parser = subparsers.add_parser("spectrum", help="Analytic and numeric energy levels")
    _add_system_flags(spectrum_parser)
    _add_ordering_flag(spectrum_parser)
    spectrum_parser.add_argument("--levels", type=int, help="Number of levels (default: from config)")
    spectrum_parser.add_argument("--grid", type=str, help="Numeric grid as xmin:xmax:n")
    spectrum_parser.add_argument("--numeric", action="store_true", help="Also solve numerically")
    spectrum_parser.add_argument("--seed", type=int, help="Seed of the inverse-iteration start vector")
    spectrum_parser.add_argument("--workers", type=int, help="Threads for eigenvalue bisection")
    _add_output_flags(spectrum_parser)

    # SUSY command
    susy_parser = subparsers.add_parser("susy", help="Superpotential and partner potentials")
    _add_system_flags(susy_parser)
    susy_parser.add_argument("--grid", type=str, help="Sampling grid as xmin:xmax:n")
    susy_parser.add_argument(
        "--out",
        type=str,
        help="CSV path; the JSON summary goes next to it (default: <output dir>/susy.csv)",
    )
    susy_parser.add_argument("--delimiter", type=str, help="CSV delimiter, ',' or ' '")

    # Sweep command
    sweep_parser = subparsers.add_parser("sweep", help="Analytic levels over a parameter range")
    sweep_parser.add_argument(
        "--param", type=str, required=True, help="Parameter: V0, c, m0, a, alpha or gamma"
    )
    sweep_parser.add_argument(
        "--range", type=str, required=True, help="Values as start:stop:count (stop included)"
    )
    _add_system_flags(sweep_parser)
    _add_ordering_flag(sweep_parser)
    sweep_parser.add_argument("--levels", type=int, help="Number of levels (default: from config)")
    _add_output_flags(sweep_parser, default_format="csv")

    # Verify command
    verify_parser = subparsers.add_parser("verify", help="Run the verification suite")
    verify_parser.add_argument("--grid", type=str, help="Reference grid as xmin:xmax:n")
    verify_parser.add_argument("--levels", type=int, help="Number of levels checked (default: 4)")
    verify_parser.add_argument("--seed", type=int, help="Seed for random samples and start vectors")
    verify_parser.add_argument(
        "--check", type=str, action="append", help="Run only this check (repeatable)"
    )
    verify_parser.add_argument("--format", type=str, choices=["table", "json"], default="table")
    verify_parser.add_argument("--out", type=str, help="Write the report to this file")

    return parser


def join_range_values(argv: Sequence[str]) -> list[str]:
    """Attach values such as ``-36:8:879`` to their flag as ``--grid=-36:8:879``.

    argparse takes a token starting with '-' for an option unless it is a plain
    negative number, so grid and range specs with a negative start need the '=' form.
    """
    joined: list[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token in RANGE_FLAGS:
            value = next(tokens, None)
            if value is not None and value.startswith("-") and ":" in value:
                joined.append(f"{token}={value}")
                continue
            joined.append(token)
            if value is not None:
                joined.append(value)
            continue
        joined.append(token)
    return joined


def main(args: Sequence[str] | None = None) -> None:
    """Argument parser for the CLI."""
    parser = build_parser()
    parsed_args = parser.parse_args(join_range_values(sys.argv[1:] if args is None else args))

    if not parsed_args.command:
        parser.print_help()
        return

    # Import here to improve startup time
    from pdmsusy.utils.logger import JSONLinesLogger
    from pdmsusy.utils.progress import console_manager

    console_manager.set_quiet(parsed_args.quiet)
    json_logger = JSONLinesLogger(parsed_args.log_file) if parsed_args.log_file else None
    run_id = f"{parsed_args.command}_{datetime.now().strftime('%Y%m%d_%H%M%S')}"

    commands: dict[str, Callable[[Namespace, Any, str], None]] = {
        "orderings": run_orderings_command,
        "spectrum": run_spectrum_command,
        "susy": run_susy_command,
        "sweep": run_sweep_command,
        "verify": run_verify_command,
    }

    try:
        if json_logger:
            json_logger.log_run_start(run_id, parsed_args.command, _parameters(parsed_args))
        commands[parsed_args.command](parsed_args, json_logger, run_id)
    except Exception as e:
        code = exit_code_for(e)
        if code == EXIT_FAILURE and not _is_library_error(e):
            raise
        if json_logger:
            json_logger.log_error(run_id, type(e).__name__, str(e))
        console_manager.print_error(str(e))
        sys.exit(code)
    finally:
        if json_logger:
            json_logger.close()


def _is_library_error(error: Exception) -> bool:
    from pdmsusy.core.errors import PdmSusyError

    return isinstance(error, PdmSusyError)


def exit_code_for(error: Exception) -> int:
    """Exit status for an exception raised by a command."""
    from pdmsusy.core.errors import (
        ComplexOrdering,
        DomainTooSmall,
        ExportError,
        GridTooCoarse,
        NoBoundStates,
        ValidationError,
        VerificationFailed,
    )

    if isinstance(error, ComplexOrdering):
        return EXIT_COMPLEX
    if isinstance(error, VerificationFailed):
        return EXIT_VERIFICATION
    if isinstance(error, ExportError):
        return EXIT_IO
    # Bad configuration files and input-dependent numeric limits are usage errors
    if isinstance(error, ValidationError | NoBoundStates | GridTooCoarse | DomainTooSmall):
        return EXIT_USAGE
    if isinstance(error, ValueError | FileNotFoundError):
        return EXIT_USAGE
    return EXIT_FAILURE


def _parameters(args: Namespace) -> dict[str, Any]:
    return {key: value for key, value in vars(args).items() if value is not None}


def _load_config(args: Namespace) -> Any:
    from pdmsusy.utils.config import PdmConfig, get_config, set_config

    if args.config:
        config = PdmConfig(args.config)
        set_config(config)
        return config
    return get_config()


def _resolve_system(config: Any, args: Namespace) -> Any:
    config.apply_overrides(
        "system", {"hbar": args.hbar, "m0": args.m0, "c": args.c, "V0": args.V0}
    )
    return config.create_system_config()


def _resolve_ordering(config: Any, args: Namespace) -> tuple[str, Any]:
    from pdmsusy.utils.validation import ParameterValidator

    return ParameterValidator.parse_ordering(args.ordering or config.ordering["preset"])


def _resolve_grid(config: Any, args: Namespace, system: Any) -> Any:
    from pdmsusy.utils.validation import ParameterValidator

    if args.grid:
        return ParameterValidator.parse_grid(args.grid)
    return config.create_grid(system)


def _resolve_levels(config: Any, args: Namespace) -> int:
    from pdmsusy.utils.validation import ParameterValidator

    levels = args.levels if args.levels is not None else int(config.cli["levels"])
    return ParameterValidator.validate_levels(levels)


def _emit(text: str, out: str | None) -> None:
    from pdmsusy.utils.export import write_text
    from pdmsusy.utils.progress import console_manager

    if out:
        path = write_text(out, text)
        console_manager.print_success(f"Wrote {path}")
    else:
        console_manager.print_raw(text)


def _emit_rows(
    args: Namespace,
    config: Any,
    title: str,
    columns: list[str],
    rows: list[list[Any]],
    metadata: dict[str, Any],
    payload: dict[str, Any],
    seed: int | None = None,
) -> None:
    """Print a table, or write CSV or JSON, according to --format and --out."""
    from pdmsusy.utils.export import format_cell, render_csv, render_json, write_csv
    from pdmsusy.utils.progress import console_manager

    output_format = args.format or config.output["format"]
    if output_format == "json":
        _emit(render_json(payload, __version__, seed), args.out)
    elif args.out:
        delimiter = args.delimiter or config.output["delimiter"]
        path = write_csv(args.out, columns, rows, delimiter, metadata)
        console_manager.print_success(f"Wrote {path}")
    elif output_format == "csv":
        delimiter = args.delimiter or config.output["delimiter"]
        console_manager.print_raw(render_csv(columns, rows, delimiter, metadata))
    else:
        console_manager.print_table(title, columns, [[format_cell(cell) for cell in row] for row in rows])


def run_orderings_command(args: Namespace, json_logger: Any, run_id: str) -> None:
    """Run the ordering classification command."""
    from pdmsusy.core.models import SystemConfig
    from pdmsusy.core.ordering import preset
    from pdmsusy.experiments.runner import ExperimentRunner

    config = _load_config(args)
    runner = ExperimentRunner(SystemConfig(), preset("zhu-kroemer").params)
    table = runner.orderings_table()
    columns = list(table[0])
    rows = [[row[column] for column in columns] for row in table]

    _emit_rows(
        args,
        config,
        "Ordering presets",
        columns,
        rows,
        metadata={"command": "orderings", "version": __version__},
        payload={"command": "orderings", "orderings": table},
    )


def run_spectrum_command(args: Namespace, json_logger: Any, run_id: str) -> None:
    """Run the spectrum command."""
    from pdmsusy.experiments.runner import ExperimentRunner
    from pdmsusy.utils.progress import console_manager

    config = _load_config(args)
    system = _resolve_system(config, args)
    label, ordering = _resolve_ordering(config, args)
    levels = _resolve_levels(config, args)
    config.apply_overrides("solver", {"seed": args.seed, "workers": args.workers})
    options = config.create_solver_options()
    grid = _resolve_grid(config, args, system) if args.numeric else None

    runner = ExperimentRunner(system, ordering, grid, options, json_logger, run_id)
    if args.numeric:
        console_manager.print_info(f"Solving {levels} levels of {label} on {grid.to_spec()}")
    report = runner.spectrum_report(levels, numeric=args.numeric)

    grid_report = report.get("grid_report", {})
    if grid_report.get("boundary_sensitive"):
        console_manager.print_warning("Levels depend on the light-mass end; widen the grid")

    columns = list(report["levels"][0])
    rows = [[row[column] for column in columns] for row in report["levels"]]
    metadata = {
        "command": "spectrum",
        "ordering": label,
        **system.to_dict(),
        "nu": report["nu"],
        "kappa": report["kappa"],
        "version": __version__,
    }
    if args.numeric:
        metadata.update({"grid": report["grid"], "seed": options.seed})

    _emit_rows(
        args,
        config,
        f"Spectrum of {label} (nu = {report['nu']!r}, kappa = {report['kappa']!r})",
        columns,
        rows,
        metadata=metadata,
        payload={"command": "spectrum", **report},
        seed=options.seed if args.numeric else None,
    )


def run_susy_command(args: Namespace, json_logger: Any, run_id: str) -> None:
    """Run the SUSY dump command."""
    from pdmsusy.core.ordering import preset
    from pdmsusy.experiments.runner import ExperimentRunner
    from pdmsusy.utils.export import write_array, write_json
    from pdmsusy.utils.progress import console_manager

    config = _load_config(args)
    system = _resolve_system(config, args)
    grid = _resolve_grid(config, args, system)
    runner = ExperimentRunner(system, preset("zhu-kroemer").params, grid, logger=json_logger, run_id=run_id)
    columns, data, summary = runner.susy_dump()

    csv_path = Path(args.out) if args.out else Path(config.output["default_output_dir"]) / "susy.csv"
    json_path = csv_path.with_suffix(".json")
    delimiter = args.delimiter or config.output["delimiter"]
    metadata = {"command": "susy", **system.to_dict(), "grid": grid.to_spec(), "version": __version__}

    write_array(csv_path, columns, data, delimiter, metadata)
    write_json(json_path, {"command": "susy", **summary}, __version__)
    if json_logger:
        json_logger.log_run_summary(run_id, summary)

    residuals = summary["identity_residuals"]
    console_manager.print_info(
        f"E0 = {summary['E0']!r}, max|V2 - V| = {residuals['partner_absolute']:.3g}, "
        f"max|V1 + E0 - V - U| = {residuals['factorization_absolute']:.3g}"
    )
    console_manager.print_success(f"Wrote {csv_path} and {json_path}")


def run_sweep_command(args: Namespace, json_logger: Any, run_id: str) -> None:
    """Run the parameter sweep command."""
    from pdmsusy.experiments.runner import ExperimentRunner, sweep_table
    from pdmsusy.utils.validation import ParameterValidator

    config = _load_config(args)
    parameter = ParameterValidator.validate_sweep_parameter(args.param)
    values = ParameterValidator.parse_range(args.range)
    system = _resolve_system(config, args)
    label, ordering = _resolve_ordering(config, args)
    levels = _resolve_levels(config, args)

    runner = ExperimentRunner(system, ordering, logger=json_logger, run_id=run_id)
    sweep_rows = runner.sweep(parameter, values, levels)
    columns, rows = sweep_table(sweep_rows, parameter, levels)
    if json_logger:
        statuses = [row.status for row in sweep_rows]
        json_logger.log_run_summary(run_id, {"rows": len(rows), "ok": statuses.count("ok")})

    _emit_rows(
        args,
        config,
        f"Sweep of {parameter} ({label})",
        columns,
        rows,
        metadata={
            "command": "sweep",
            "parameter": parameter,
            "range": args.range,
            "ordering": label,
            **system.to_dict(),
            "version": __version__,
        },
        payload={
            "command": "sweep",
            "parameter": parameter,
            "ordering": label,
            "system": system.to_dict(),
            "rows": [dict(zip(columns, row, strict=True)) for row in rows],
        },
    )


def run_verify_command(args: Namespace, json_logger: Any, run_id: str) -> None:
    """Run the verification suite; any failed or skipped check exits non-zero."""
    from pdmsusy.core.errors import VerificationFailed
    from pdmsusy.experiments.verify import VerificationContext, VerificationSuite
    from pdmsusy.utils.export import render_json
    from pdmsusy.utils.progress import console_manager
    from pdmsusy.utils.validation import ParameterValidator

    config = _load_config(args)
    config.apply_overrides("solver", {"seed": args.seed})
    options = config.create_solver_options()
    grid = ParameterValidator.parse_grid(args.grid) if args.grid else None
    levels = ParameterValidator.validate_levels(args.levels if args.levels is not None else 4)
    names = VerificationSuite.resolve(args.check)

    context = VerificationContext(grid=grid, levels=levels, options=options)
    with console_manager.track("Verifying", total=len(names)) as advance:
        report = VerificationSuite.run(context, names, json_logger, run_id, progress=advance)

    if args.format == "json":
        _emit(render_json({"command": "verify", **report.to_dict()}, __version__, options.seed), args.out)
    else:
        rows = [[r.name, r.status, r.message] for r in report.results]
        if args.out:
            from pdmsusy.utils.export import write_csv

            path = write_csv(args.out, ["check", "status", "message"], rows, metadata={"status": report.status})
            console_manager.print_success(f"Wrote {path}")
        else:
            console_manager.print_table(f"Verification: {report.status}", ["check", "status", "message"], rows)

    counts = report.counts()
    if report.status != "pass":
        raise VerificationFailed(
            f"Verification {report.status}: {counts['fail']} failed, {counts['error']} could not run"
        )
    console_manager.print_success(f"All {counts['pass']} checks passed")


if __name__ == "__main__":
    main()
