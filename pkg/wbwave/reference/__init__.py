"""
wbwave Reference Plane
Comparison schemes: Strang splitting with Crank-Nicolson diffusion and the 0-wave WB scheme.
"""
from .splitting import (
    ReactionMode,
    SplitOrder,
    OSConfig,
    exact_logistic,
    implicit_euler_reaction,
    reaction_half_step,
    crank_nicolson_diffusion,
    strang_step,
)
from .zero_wave import zero_wave_step

__all__ = [
    'ReactionMode',
    'SplitOrder',
    'OSConfig',
    'exact_logistic',
    'implicit_euler_reaction',
    'reaction_half_step',
    'crank_nicolson_diffusion',
    'strang_step',
    'zero_wave_step',
]
