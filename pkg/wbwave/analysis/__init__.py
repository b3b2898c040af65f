"""
wbwave Analysis Plane
Observation of runs: level sets, delay fits and convergence tables.
"""
from .run_record import RunRecord
from .level_set import level_set_position, profile_error
from .delay_fit import FitResult, fit_delay, fit_series
from .convergence import ConvergenceRow, convergence_table, sign_changes

__all__ = [
    'RunRecord',
    'level_set_position',
    'profile_error',
    'FitResult',
    'fit_delay',
    'fit_series',
    'ConvergenceRow',
    'convergence_table',
    'sign_changes',
]
