"""
Table CLI Commands

Convergence tables from finished run directories.
"""
import argparse
from typing import Dict, List, Sequence

from wbwave.analysis import sign_changes
from wbwave.errors import ConfigError
from wbwave.harness import RunSummary, convergence_tables, read_summary

HEADERS = ["dx", "sigma", "sigma - target", "sign"]


def register_commands(parser: argparse.ArgumentParser):
    """Register table arguments."""
    parser.add_argument("dirs", nargs="+", help="Run directories containing summary.yml")


def render_tables(summaries: Sequence[RunSummary]) -> dict:
    """Convergence tables grouped by scheme, in the formatter's table layout."""
    tables, skipped = convergence_tables(summaries)
    rendered: Dict[str, dict] = {}
    changes: Dict[str, List[float]] = {}
    for scheme, rows in tables.items():
        rendered[scheme] = {"headers": HEADERS, "rows": [row.as_list() for row in rows]}
        changes[scheme] = sign_changes(rows)

    result = {"status": "success", "table": rendered, "sign_changes": changes}
    if skipped:
        result["single_run_schemes"] = skipped
    truncated = [s.output_dir for s in summaries if s.truncated]
    if truncated:
        result["truncated"] = truncated
    return result


def execute(args: argparse.Namespace) -> dict:
    """Execute table command."""
    summaries = [RunSummary.from_dict(read_summary(d)) for d in args.dirs]
    result = render_tables(summaries)
    if not result["table"]:
        raise ConfigError("A convergence table needs at least 2 runs of the same scheme")
    return result
