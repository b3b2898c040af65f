"""
Fit CLI Command

Fits the delay model to a stored timeseries.csv.
"""
import argparse

from wbwave.analysis import fit_delay
from wbwave.harness import read_timeseries


def register_commands(parser: argparse.ArgumentParser):
    """Register fit arguments."""
    parser.add_argument("timeseries", help="Path to a timeseries.csv")
    parser.add_argument("--speed", type=float, required=True, help="Reference speed subtracted from x_c(t)")
    parser.add_argument("--level", type=float, default=0.5, help="Tracked level c (default 0.5)")


def execute(args: argparse.Namespace) -> dict:
    """Execute fit command."""
    record = read_timeseries(args.timeseries, level_c=args.level)
    fit = fit_delay(record, args.speed, args.level)
    result = {"status": "success", "samples": len(record)}
    result.update(fit.as_dict())
    return result
