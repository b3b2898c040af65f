"""
Zero-Wave WB Scheme

The WB step with the frame speed pinned to 0: well balanced for
stationary states only, and no shift back is needed.
"""
from typing import Optional

from ..errors import NumericalError
from ..model.grid import Grid, Profile
from ..model.reaction import ReactionModel
from ..scheme.timestep import PARABOLIC_COEFFICIENT, Integrator
from ..scheme.wb_step import FactorFn, wb_step_explicit, wb_step_implicit


def zero_wave_step(
    curr: Profile,
    dt: float,
    model: ReactionModel,
    grid: Grid,
    integrator: Integrator = Integrator.IMPLICIT_WB,
    factor_fn: Optional[FactorFn] = None,
) -> Profile:
    if integrator is Integrator.EXPLICIT_WB:
        if dt > PARABOLIC_COEFFICIENT * grid.dx * grid.dx:
            raise NumericalError(
                f"Explicit 0-wave step violates dt <= dx^2/2 (dt={dt}, dx={grid.dx})",
                details={"dt": dt, "dx": grid.dx},
            )
        return wb_step_explicit(curr, 0.0, dt, model, grid, factor_fn)
    return wb_step_implicit(curr, 0.0, dt, model, grid, factor_fn)
