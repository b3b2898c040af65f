"""
Operator Splitting Scheme

Strang splitting u^{n+1} = R_{dt/2} D_dt R_{dt/2} u^n with Crank-Nicolson
diffusion D_dt and either the exact logistic flow (FKPP) or a backward
Euler step solved by Newton (any supported model) for R.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple
import logging

import numpy as np

from ..errors import ConvergenceError
from ..model.grid import Grid
from ..model.reaction import ReactionKind, ReactionModel
from ..scheme.tridiag import TridiagonalSystem, thomas_solve

logger = logging.getLogger(__name__)

NEWTON_TOLERANCE = 1e-13
NEWTON_MAX_ITERATIONS = 50


class ReactionMode(Enum):
    EXACT_LOGISTIC = "exact_logistic"
    IMPLICIT_EULER = "implicit_euler"


class SplitOrder(Enum):
    """Which operator takes the two half steps."""
    REACTION_OUTSIDE = "reaction_outside"
    DIFFUSION_OUTSIDE = "diffusion_outside"


@dataclass(frozen=True)
class OSConfig:
    dt: float = 0.05
    reaction_mode: ReactionMode = ReactionMode.EXACT_LOGISTIC
    order: SplitOrder = SplitOrder.REACTION_OUTSIDE

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError(f"Splitting step must be positive, got dt={self.dt}")

    @classmethod
    def for_model(cls, model: ReactionModel, dt: float) -> "OSConfig":
        """Exact logistic flow for FKPP, Newton-solved backward Euler otherwise."""
        mode = ReactionMode.EXACT_LOGISTIC if model.kind is ReactionKind.FKPP else ReactionMode.IMPLICIT_EULER
        return cls(dt=dt, reaction_mode=mode)


def exact_logistic(v: np.ndarray, tau: float) -> np.ndarray:
    """
    Exact flow of v' = v(1-v) over tau.

    e^tau / (e^tau - 1 + 1/v) written as e^tau v / (1 + (e^tau - 1) v),
    which extends continuously to R(0) = 0.
    """
    return np.exp(tau) * v / (1.0 + np.expm1(tau) * v)


def implicit_euler_reaction(v: np.ndarray, tau: float, model: ReactionModel) -> np.ndarray:
    """Solve w - tau f(w) = v pointwise by Newton's method started at w = v."""
    w = np.array(v, dtype=float, copy=True)
    for _ in range(NEWTON_MAX_ITERATIONS):
        residual = w - tau * model.reaction_rate(w) - v
        slope = 1.0 - tau * model.reaction_derivative(w)
        step = residual / slope
        w -= step
        if np.max(np.abs(step), initial=0.0) <= NEWTON_TOLERANCE * max(1.0, np.max(np.abs(w), initial=0.0)):
            return w
    raise ConvergenceError(
        f"Newton iteration for the reaction step did not converge in {NEWTON_MAX_ITERATIONS} iterations",
        details={"tau": tau, "max_step": float(np.max(np.abs(step)))},
    )


def reaction_half_step(u: np.ndarray, tau: float, model: ReactionModel, mode: ReactionMode) -> np.ndarray:
    """Advance the reaction ODE v' = f(v) by tau at every node."""
    if not tau > 0:
        raise ValueError(f"Reaction step must be positive, got tau={tau}")
    u = np.asarray(u, dtype=float)
    if mode is ReactionMode.EXACT_LOGISTIC:
        if model.kind is not ReactionKind.FKPP:
            raise ValueError("The exact logistic flow is only valid for the FKPP model")
        return exact_logistic(u, tau)
    return implicit_euler_reaction(u, tau, model)


def crank_nicolson_diffusion(u: np.ndarray, dt: float, dx: float, bc: Tuple[float, float]) -> np.ndarray:
    """
    One Crank-Nicolson step of v_t = v_xx with Dirichlet ends:

        (I - lam/2 d2) v^{n+1} = (I + lam/2 d2) v^n,  lam = dt/dx^2.
    """
    if not dt > 0 or not dx > 0:
        raise ValueError(f"dt and dx must be positive, got dt={dt}, dx={dx}")
    u = np.asarray(u, dtype=float)
    n = u.size
    half = 0.5 * dt / (dx * dx)

    rhs = u.copy()
    rhs[1:-1] += half * (u[:-2] - 2.0 * u[1:-1] + u[2:])
    rhs[0], rhs[-1] = bc

    lower = np.full(n, -half)
    diagonal = np.full(n, 1.0 + 2.0 * half)
    upper = np.full(n, -half)
    lower[0] = upper[0] = lower[-1] = upper[-1] = 0.0
    diagonal[0] = diagonal[-1] = 1.0

    return thomas_solve(TridiagonalSystem(lower=lower, diagonal=diagonal, upper=upper, rhs=rhs))


def strang_step(u: np.ndarray, cfg: OSConfig, model: ReactionModel, grid: Grid) -> np.ndarray:
    """
    One Strang step. The end values of u are the Dirichlet states and are
    restored after the step.
    """
    u = np.asarray(u, dtype=float)
    bc = (float(u[0]), float(u[-1]))
    half = 0.5 * cfg.dt
    logger.debug(f"Strang step dt={cfg.dt:.6g}, {cfg.order.value}, {cfg.reaction_mode.value}")

    if cfg.order is SplitOrder.REACTION_OUTSIDE:
        v = reaction_half_step(u, half, model, cfg.reaction_mode)
        v = crank_nicolson_diffusion(v, cfg.dt, grid.dx, bc)
        v = reaction_half_step(v, half, model, cfg.reaction_mode)
    else:
        v = crank_nicolson_diffusion(u, half, grid.dx, bc)
        v = reaction_half_step(v, cfg.dt, model, cfg.reaction_mode)
        v = crank_nicolson_diffusion(v, half, grid.dx, bc)

    v[0], v[-1] = bc
    return v
