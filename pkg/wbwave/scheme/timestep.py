"""
Time Step Selection

Dynamic time points: the hyperbolic CFL |sigma| dt <= dx always holds, and
the parabolic bound dt <= dx^2/2 is added for explicit integration or when
a parabolic step is requested explicitly.
"""
from dataclasses import dataclass
from enum import Enum
import logging

import numpy as np

logger = logging.getLogger(__name__)

PARABOLIC_COEFFICIENT = 0.5


class Integrator(Enum):
    IMPLICIT_WB = "implicit_wb"
    EXPLICIT_WB = "explicit_wb"


@dataclass(frozen=True)
class StepConfig:
    """
    Time-step controls of the WB schemes.

    parabolic_limit adds dt <= dx^2/2 to the implicit integrator too
    (small-step runs and equal-step comparisons).
    """
    integrator: Integrator = Integrator.IMPLICIT_WB
    dt_cap: float = 0.05
    cfl_safety: float = 1.0
    sigma_floor: float = 1e-6
    parabolic_limit: bool = False

    def __post_init__(self):
        if isinstance(self.integrator, str):
            object.__setattr__(self, "integrator", Integrator(self.integrator))
        if not self.dt_cap > 0:
            raise ValueError(f"dt_cap must be positive, got {self.dt_cap}")
        if not 0 < self.cfl_safety <= 1:
            raise ValueError(f"cfl_safety must lie in (0, 1], got {self.cfl_safety}")
        if not self.sigma_floor > 0:
            raise ValueError(f"sigma_floor must be positive, got {self.sigma_floor}")

    @property
    def uses_parabolic_bound(self) -> bool:
        return self.parabolic_limit or self.integrator is Integrator.EXPLICIT_WB


def select_timestep(sigma_hat: float, dx: float, cfg: StepConfig) -> float:
    """
    dt = min(dt_cap, [dx^2/2,] cfl_safety * dx / max(|sigma_hat|, sigma_floor)).

    The result is nudged down by ulps until |sigma_hat| * dt <= dx holds
    in floating point.
    """
    if not dx > 0:
        raise ValueError(f"Grid spacing must be positive, got dx={dx}")

    speed = max(abs(sigma_hat), cfg.sigma_floor)
    dt = min(cfg.dt_cap, cfg.cfl_safety * dx / speed)
    if cfg.uses_parabolic_bound:
        dt = min(dt, PARABOLIC_COEFFICIENT * dx * dx)

    while abs(sigma_hat) * dt > dx:
        dt = float(np.nextafter(dt, 0.0))
    return dt


def clip_to_horizon(dt: float, remaining: float) -> float:
    """
    Shorten dt so a run lands exactly on its final time.

    A remainder between one and two steps is split in half, so the last
    step is never a sliver.
    """
    if not remaining > 0:
        raise ValueError(f"Remaining time must be positive, got {remaining}")
    if remaining <= dt:
        return remaining
    if remaining < 2.0 * dt:
        logger.debug(f"Splitting the remaining {remaining:.6g} into two steps (dt={dt:.6g})")
        return 0.5 * remaining
    return dt
