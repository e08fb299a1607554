"""
Console output and progress tracking for PdmSusy runs.

Data (tables, CSV, JSON) goes to stdout; diagnostics go to stderr so piped output
stays clean.
"""

from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from typing import Any

from rich.console import Console  # type: ignore[import-untyped]
from rich.progress import (  # type: ignore[import-untyped]
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
)
from rich.table import Table  # type: ignore[import-untyped]


class ConsoleManager:
    """Global console manager for PdmSusy operations."""

    _instance: "ConsoleManager | None" = None
    console: Any
    err_console: Any
    quiet: bool

    def __new__(cls) -> "ConsoleManager":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance.console = Console()
            cls._instance.err_console = Console(stderr=True)
            cls._instance.quiet = False
        return cls._instance

    def set_quiet(self, quiet: bool) -> None:
        self.quiet = quiet

    def print_raw(self, text: str) -> None:
        """Write text to stdout without markup, highlighting or wrapping."""
        self.console.out(text, highlight=False)

    def print_table(
        self, title: str, columns: Sequence[str], rows: Sequence[Sequence[Any]]
    ) -> None:
        table = Table(title=title)
        for column in columns:
            table.add_column(column, justify="right" if column != columns[0] else "left")
        for row in rows:
            table.add_row(*("" if cell is None else str(cell) for cell in row))
        self.console.print(table)

    def print_warning(self, message: str) -> None:
        if not self.quiet:
            self.err_console.print(f"⚠️  [yellow]Warning:[/yellow] {message}")

    def print_error(self, message: str) -> None:
        self.err_console.print(f"❌ [red]Error:[/red] {message}")

    def print_success(self, message: str) -> None:
        if not self.quiet:
            self.err_console.print(f"✅ [green]Success:[/green] {message}")

    def print_info(self, message: str) -> None:
        if not self.quiet:
            self.err_console.print(f"ℹ️  [blue]Info:[/blue] {message}")

    @contextmanager
    def track(self, description: str, total: int) -> Iterator[Callable[[str | None], None]]:
        """Progress bar for a fixed number of steps.

        Yields:
            A function advancing the bar by one step, optionally renaming it
        """
        progress: Any = Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=self.err_console,
            disable=self.quiet,
        )
        with progress:
            task_id: Any = progress.add_task(description, total=total)

            def advance(label: str | None = None) -> None:
                if label:
                    progress.update(task_id, description=f"{description} | {label}")
                progress.advance(task_id, 1)

            yield advance


# Global console manager instance
console_manager = ConsoleManager()
