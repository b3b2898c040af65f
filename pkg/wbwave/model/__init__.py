"""
wbwave Model Plane
Reaction models, analytic reference quantities, grids and initial data.
"""
from .reaction import (
    ReactionKind,
    ReactionModel,
    Regime,
    reaction_rate,
    growth_factor,
    minimal_wave_speed,
    regime,
    expected_log_coefficient,
    expected_speed_at,
)
from .grid import Grid, Profile, make_grid
from .initial import sigmoid_initial, exact_pushed_front

__all__ = [
    'ReactionKind',
    'ReactionModel',
    'Regime',
    'reaction_rate',
    'growth_factor',
    'minimal_wave_speed',
    'regime',
    'expected_log_coefficient',
    'expected_speed_at',
    'Grid',
    'Profile',
    'make_grid',
    'sigmoid_initial',
    'exact_pushed_front',
]
