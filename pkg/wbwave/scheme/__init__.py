"""
wbwave Scheme Plane
The well-balanced moving-frame time step and its building blocks.
"""
from .speed import SpeedEstimate, leveque_yee, mass_change
from .timestep import Integrator, StepConfig, clip_to_horizon, select_timestep
from .tridiag import TridiagonalSystem, thomas_solve
from .wb_step import (
    StepOutcome,
    frozen_factors,
    assemble_implicit,
    wb_step_implicit,
    wb_step_explicit,
    shift_back,
    flush_subnormals,
    advance,
)

__all__ = [
    'SpeedEstimate',
    'leveque_yee',
    'mass_change',
    'Integrator',
    'StepConfig',
    'select_timestep',
    'clip_to_horizon',
    'TridiagonalSystem',
    'thomas_solve',
    'StepOutcome',
    'frozen_factors',
    'assemble_implicit',
    'wb_step_implicit',
    'wb_step_explicit',
    'shift_back',
    'flush_subnormals',
    'advance',
]
