"""
Run CLI Command

Runs one experiment from a key-value or YAML config file.
"""
import argparse

from wbwave.harness import build_config, execute_run, load_config


def register_commands(parser: argparse.ArgumentParser):
    """Register run arguments."""
    parser.add_argument("config", help="Config file (key = value lines, or .yml/.yaml)")
    parser.add_argument("--output-dir", help="Override output_dir from the config")
    parser.add_argument("--budget", type=int, help="Cap on the total number of time steps")
    parser.add_argument("--no-svg", action="store_true", help="Skip the SVG chart")


def execute(args: argparse.Namespace) -> dict:
    """Execute run command."""
    cfg = load_config(args.config)
    overrides = {}
    if args.output_dir:
        overrides["output_dir"] = args.output_dir
    if args.budget is not None:
        overrides["budget"] = args.budget
    if args.no_svg:
        overrides["svg"] = False
    if overrides:
        cfg = build_config({**cfg.model_dump(), **overrides})

    _, summary = execute_run(cfg)
    result = {"status": "truncated" if summary.truncated else "success"}
    result.update(summary.as_dict())
    return result
