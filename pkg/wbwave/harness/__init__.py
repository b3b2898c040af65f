"""
wbwave Harness
Configuration, presets, the run loop, sweeps and run outputs.
"""
from .config import (
    ExperimentConfig,
    SchemeName,
    InitialKind,
    parse_config,
    build_config,
    load_config,
)
from .presets import PRESETS, Preset, expand_preset, list_presets
from .budget import StepBudget
from .runner import RunSummary, Simulation, execute_run, run_experiment, initial_profile
from .outputs import emit_outputs, read_timeseries, read_summary, format_fit
from .sweep import run_sweep, group_by_scheme, convergence_tables

__all__ = [
    'ExperimentConfig',
    'SchemeName',
    'InitialKind',
    'parse_config',
    'build_config',
    'load_config',
    'PRESETS',
    'Preset',
    'expand_preset',
    'list_presets',
    'StepBudget',
    'RunSummary',
    'Simulation',
    'execute_run',
    'run_experiment',
    'initial_profile',
    'emit_outputs',
    'read_timeseries',
    'read_summary',
    'format_fit',
    'run_sweep',
    'group_by_scheme',
    'convergence_tables',
]
