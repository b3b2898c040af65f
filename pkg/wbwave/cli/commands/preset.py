"""
Preset CLI Commands

Expands a named study into a dx sweep, runs it and prints the
convergence tables.
"""
import argparse

from wbwave.harness import PRESETS, expand_preset, list_presets, run_sweep

from .table import render_tables


def register_commands(parser: argparse.ArgumentParser):
    """Register preset arguments."""
    parser.add_argument("name", choices=sorted(PRESETS), help="Preset name")
    parser.add_argument("--dx", type=float, nargs="+", help="Mesh sizes (default 2^-1 ... 2^-6)")
    parser.add_argument("--t-end", type=float, help="Final time (default 1500)")
    parser.add_argument("--scheme", nargs="+", help="Schemes to run (default: the preset's schemes)")
    parser.add_argument("--budget", type=int, help="Cap on the number of time steps per run")
    parser.add_argument("--same-dt", action="store_true", help="Share the most restrictive time-step rule across schemes")
    parser.add_argument("--max-cells", type=int, help="Skip runs whose grid exceeds this many cells")
    parser.add_argument("--workers", type=int, default=1, help="Runs executed concurrently")
    parser.add_argument("--output-dir", default="runs", help="Root directory of the sweep outputs")


def execute(args: argparse.Namespace) -> dict:
    """Execute preset command."""
    configs = expand_preset(
        args.name,
        dx=args.dx,
        t_end=args.t_end,
        schemes=args.scheme,
        budget=args.budget,
        same_dt=args.same_dt,
        max_cells=args.max_cells,
        output_dir=args.output_dir,
    )
    summaries = run_sweep(configs, workers=args.workers)
    result = {"preset": args.name, "runs": len(summaries)}
    result.update(render_tables(summaries))
    if len(summaries) == 1:
        only = summaries[0]
        result["final_speed"] = only.final_speed
        result["speed_error"] = only.speed_error
    return result


def execute_list(args: argparse.Namespace) -> dict:
    """List the available presets."""
    return {p["name"]: f"{p['description']} [{', '.join(p['schemes'])}]" for p in list_presets()}
