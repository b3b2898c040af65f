"""
Well-Balanced Moving-Frame Step

One time step of the WB scheme:

1. LeVeque-Yee estimate sigma_hat from the two latest stationary-frame levels.
2. Evolution in the frame moving at sigma_hat, where
   u_t - sigma_hat u_z - u_zz = u F(u) with F frozen per cell; the node
   update is driven by the C1 defect L_{i+1/2} - R_{i-1/2} of the
   cell-wise exact solutions (implicit or explicit in time).
3. Well-balanced shift back: every stationary node x_i is read from the
   frozen-coefficient solution of the cell containing z_i - sigma_hat dt.
"""
from typing import Callable, NamedTuple, Optional
import logging

import numpy as np

from ..cell.operator import flux_coefficients, shift_weights
from ..errors import NumericalError
from ..model.grid import Grid, Profile
from ..model.reaction import ReactionModel
from .speed import SpeedEstimate, leveque_yee
from .timestep import Integrator, StepConfig, clip_to_horizon, select_timestep
from .tridiag import TridiagonalSystem, thomas_solve

logger = logging.getLogger(__name__)

FactorFn = Callable[[np.ndarray], np.ndarray]

TINY = np.finfo(float).tiny


class StepOutcome(NamedTuple):
    profile: Profile
    speed: SpeedEstimate
    dt: float


def frozen_factors(values: np.ndarray, model: ReactionModel, factor_fn: Optional[FactorFn] = None) -> np.ndarray:
    """Per-cell factor F((u_i + u_{i+1})/2)."""
    midpoints = 0.5 * (values[:-1] + values[1:])
    if factor_fn is not None:
        return np.asarray(factor_fn(midpoints), dtype=float)
    return model.growth_factor(midpoints)


def flush_subnormals(values: np.ndarray) -> np.ndarray:
    """Zero every entry below the smallest normal double, in place."""
    values[np.abs(values) < TINY] = 0.0
    return values


def c1_defect(values: np.ndarray, coefficients) -> np.ndarray:
    """L_{i+1/2} - R_{i-1/2} at every interior node."""
    s00, s01, s10, s11 = coefficients
    left_flux = s00 * values[:-1] + s01 * values[1:]
    right_flux = s10 * values[:-1] + s11 * values[1:]
    return left_flux[1:] - right_flux[:-1]


def assemble_implicit(
    curr: Profile,
    sigma_hat: float,
    dt: float,
    model: ReactionModel,
    grid: Grid,
    factor_fn: Optional[FactorFn] = None,
) -> TridiagonalSystem:
    """
    Tridiagonal system of the implicit WB rule

        u_i^{n+1} - (dt/dx) (L^{n+1}_{i+1/2} - R^{n+1}_{i-1/2}) = u_i^n

    with fluxes from S built on (sigma_hat, F(time-n midpoints), dx).
    The end rows pin the boundary states.
    """
    values = curr.values
    s00, s01, s10, s11 = flux_coefficients(sigma_hat, frozen_factors(values, model, factor_fn), grid.dx)
    lam = dt / grid.dx
    n = values.size

    lower = np.zeros(n)
    diagonal = np.ones(n)
    upper = np.zeros(n)
    rhs = values.copy()

    lower[1:-1] = lam * s10[:-1]
    diagonal[1:-1] = 1.0 - lam * s00[1:] + lam * s11[:-1]
    upper[1:-1] = -lam * s01[1:]

    rhs[0] = curr.left_state
    rhs[-1] = curr.right_state
    return TridiagonalSystem(lower=lower, diagonal=diagonal, upper=upper, rhs=rhs)


def wb_step_implicit(
    curr: Profile,
    sigma_hat: float,
    dt: float,
    model: ReactionModel,
    grid: Grid,
    factor_fn: Optional[FactorFn] = None,
) -> Profile:
    """Implicit WB update in the moving frame (no shift)."""
    system = assemble_implicit(curr, sigma_hat, dt, model, grid, factor_fn)
    return curr.with_values(flush_subnormals(thomas_solve(system)))


def wb_step_explicit(
    curr: Profile,
    sigma_hat: float,
    dt: float,
    model: ReactionModel,
    grid: Grid,
    factor_fn: Optional[FactorFn] = None,
) -> Profile:
    """Explicit WB update u^{n+1} = u^n + (dt/dx)(L^n - R^n) in the moving frame."""
    values = curr.values
    coefficients = flux_coefficients(sigma_hat, frozen_factors(values, model, factor_fn), grid.dx)
    updated = values.copy()
    updated[1:-1] += (dt / grid.dx) * c1_defect(values, coefficients)
    return curr.with_values(updated)


def shift_back(
    moving: Profile,
    sigma_hat: float,
    dt: float,
    model: ReactionModel,
    grid: Grid,
    factor_fn: Optional[FactorFn] = None,
) -> Profile:
    """
    Map moving-frame values at t^{n+1} to the stationary grid.

    For sigma_hat >= 0 the node x_i sits at z_i - sigma_hat dt, inside the
    cell (z_{i-1}, z_i) at offset dx - sigma_hat dt; the first node keeps
    the left state. A negative speed is mirrored onto the cell (z_i, z_{i+1})
    at offset |sigma_hat| dt and the last node keeps the right state.
    The frozen factor uses the moving-frame values at t^{n+1}.
    """
    shift = sigma_hat * dt
    if abs(shift) > grid.dx:
        raise NumericalError(
            f"Shift {shift} exceeds one cell (dx={grid.dx}); CFL violated",
            details={"sigma_hat": sigma_hat, "dt": dt},
        )
    if shift == 0.0:
        return moving.copy()

    values = moving.values
    factors = frozen_factors(values, model, factor_fn)
    shifted = values.copy()
    if shift > 0:
        delta = max(grid.dx - shift, 0.0)
        t0, t1 = shift_weights(sigma_hat, factors, grid.dx, delta)
        shifted[1:] = t0 * values[:-1] + t1 * values[1:]
    else:
        logger.warning(f"Mirrored shift for negative speed sigma_hat={sigma_hat}")
        t0, t1 = shift_weights(sigma_hat, factors, grid.dx, min(-shift, grid.dx))
        shifted[:-1] = t0 * values[:-1] + t1 * values[1:]
    return moving.with_values(flush_subnormals(shifted))


def advance(
    curr: Profile,
    prev: Optional[Profile],
    cfg: StepConfig,
    model: ReactionModel,
    grid: Grid,
    prev_dt: Optional[float] = None,
    sigma_override: Optional[float] = None,
    factor_fn: Optional[FactorFn] = None,
    horizon: Optional[float] = None,
) -> StepOutcome:
    """
    One full WB step: speed estimate, time step, moving-frame update, shift back.

    Without a previous level the estimate is 0 and the step is the 0-wave
    step.

    Args:
        curr: Stationary-frame profile at t^n
        prev: Profile at t^{n-1}, or None on the first step
        cfg: Integrator and time-step controls
        model: Reaction model supplying the frozen factors
        grid: Uniform grid of both profiles
        prev_dt: Step between prev and curr; required with prev
        sigma_override: Frame speed used instead of the estimate
        factor_fn: Replaces the model's growth factor on cell midpoints
        horizon: Time left until the end of the run; dt is clipped to it

    Returns:
        StepOutcome with the new profile, the speed estimated from the
        stored levels (even when overridden) and the step taken
    """
    if prev is None:
        speed = SpeedEstimate.at_rest(curr)
    else:
        if prev_dt is None:
            raise ValueError("prev_dt is required when a previous level is given")
        speed = leveque_yee(prev, curr, grid.dx, prev_dt)

    sigma = speed.sigma_hat if sigma_override is None else float(sigma_override)
    if not np.isfinite(sigma):
        raise NumericalError(f"Non-finite speed estimate {sigma}", details={"speed": speed})

    dt = select_timestep(sigma, grid.dx, cfg)
    if horizon is not None:
        dt = clip_to_horizon(dt, horizon)
    if abs(sigma) * dt > grid.dx:
        raise NumericalError(f"CFL violated: |{sigma}| * {dt} > {grid.dx}")

    if cfg.integrator is Integrator.IMPLICIT_WB:
        moving = wb_step_implicit(curr, sigma, dt, model, grid, factor_fn)
    else:
        moving = wb_step_explicit(curr, sigma, dt, model, grid, factor_fn)

    logger.debug(f"WB step: sigma_hat={sigma:.12g}, dt={dt:.6g}")
    return StepOutcome(shift_back(moving, sigma, dt, model, grid, factor_fn), speed, dt)
