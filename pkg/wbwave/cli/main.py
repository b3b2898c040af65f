"""
wbwave CLI - Main Entry Point

Command-line interface for well-balanced front simulations.
"""
import argparse
import sys
import logging

from wbwave.errors import ConfigError, NumericalError, OutputError, WBWaveError
from .commands import run, preset, fit, table
from .formatter import Formatter

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERICAL = 2
EXIT_IO = 3


class WBWaveCLI:
    """Main CLI application."""

    def __init__(self):
        self.formatter = Formatter()
        self.parser = self._build_parser()

    def _build_parser(self) -> argparse.ArgumentParser:
        """Build argument parser."""
        parser = argparse.ArgumentParser(
            prog="wbwave",
            description="wbwave - well-balanced moving-frame solver for reaction-diffusion fronts",
            formatter_class=argparse.RawDescriptionHelpFormatter
        )

        parser.add_argument(
            "--verbose", "-v",
            action="store_true",
            help="Enable verbose output"
        )

        parser.add_argument(
            "--json",
            action="store_true",
            help="Output in JSON format"
        )

        subparsers = parser.add_subparsers(dest="command", help="Available commands")

        run_parser = subparsers.add_parser("run", help="Run one experiment from a config file")
        run.register_commands(run_parser)

        preset_parser = subparsers.add_parser("preset", help="Run a preset dx sweep")
        preset.register_commands(preset_parser)

        subparsers.add_parser("presets", help="List available presets")

        fit_parser = subparsers.add_parser("fit", help="Fit the delay model to a timeseries")
        fit.register_commands(fit_parser)

        table_parser = subparsers.add_parser("table", help="Convergence table from run directories")
        table.register_commands(table_parser)

        return parser

    def _fail(self, message: str, code: int, verbose: bool, details: dict = None) -> int:
        if details:
            message = f"{message} {details}"
        self.formatter.error(message)
        if verbose:
            import traceback
            traceback.print_exc()
        return code

    def run(self, args=None) -> int:
        """Run CLI with given arguments."""
        parsed_args = self.parser.parse_args(args)

        if parsed_args.verbose:
            logging.basicConfig(level=logging.DEBUG)
        else:
            logging.basicConfig(level=logging.INFO)

        self.formatter.json_mode = parsed_args.json

        if not parsed_args.command:
            self.parser.print_help()
            return EXIT_OK

        try:
            if parsed_args.command == "run":
                result = run.execute(parsed_args)
            elif parsed_args.command == "preset":
                result = preset.execute(parsed_args)
            elif parsed_args.command == "presets":
                result = preset.execute_list(parsed_args)
            elif parsed_args.command == "fit":
                result = fit.execute(parsed_args)
            elif parsed_args.command == "table":
                result = table.execute(parsed_args)
            else:
                self.formatter.error(f"Unknown command: {parsed_args.command}")
                return EXIT_CONFIG

            self.formatter.output(result)
            return EXIT_OK

        except ConfigError as e:
            return self._fail(f"Config error: {e}", EXIT_CONFIG, parsed_args.verbose)
        except NumericalError as e:
            where = {k: e.details[k] for k in ("step", "t") if k in e.details}
            return self._fail(f"Numerical failure: {e}", EXIT_NUMERICAL, parsed_args.verbose, where)
        except (OutputError, OSError) as e:
            return self._fail(f"I/O error: {e}", EXIT_IO, parsed_args.verbose)
        except (WBWaveError, ValueError) as e:
            return self._fail(f"Error: {e}", EXIT_CONFIG, parsed_args.verbose)


def main():
    """CLI entry point."""
    cli = WBWaveCLI()
    sys.exit(cli.run())


if __name__ == "__main__":
    main()
