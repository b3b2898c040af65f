"""
CLI Output Formatter

Handles formatting of CLI output (text, JSON, tables).
"""
import json
import math
from typing import Any, List

from rich.console import Console
from rich.table import Table


def _jsonable(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


class Formatter:
    """Output formatter for CLI."""

    def __init__(self, console: Console = None):
        self.json_mode = False
        self.console = console or Console(highlight=False)

    def output(self, data: Any):
        """Output data in appropriate format."""
        if self.json_mode:
            self.console.print_json(json.dumps(_jsonable(data)))
        elif isinstance(data, dict) and "table" in data:
            for title, table in data["table"].items():
                self.table(table["headers"], table["rows"], title=title)
            rest = {k: v for k, v in data.items() if k != "table"}
            if rest:
                self._print_text(rest)
        else:
            self._print_text(data)

    def _print_text(self, data: Any):
        if isinstance(data, dict):
            for key, value in data.items():
                self.console.print(f"{key}: {value}", markup=False)
        elif isinstance(data, list):
            for item in data:
                self.console.print(f"- {item}", markup=False)
        else:
            self.console.print(str(data), markup=False)

    def error(self, message: str):
        if self.json_mode:
            self.console.print_json(json.dumps({"status": "error", "message": message}))
        else:
            self.console.print(f"✗ {message}", markup=False, style="red")

    def table(self, headers: List[str], rows: List[List[Any]], title: str = None):
        """Print data as table."""
        if self.json_mode:
            self.console.print_json(json.dumps(_jsonable([dict(zip(headers, row)) for row in rows])))
            return
        table = Table(title=title)
        for header in headers:
            table.add_column(str(header), justify="right")
        for row in rows:
            table.add_row(*(f"{cell:.10g}" if isinstance(cell, float) else str(cell) for cell in row))
        self.console.print(table)
