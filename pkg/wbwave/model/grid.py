"""
Grids and Profiles

Uniform 1D mesh and the discrete solution stored on it. The moving-frame
grid shares the same spacing, so a single Grid serves both frames.
"""
from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError

# Maximum distance of (x_max - x_min)/dx from an integer.
COMMENSURABILITY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Grid:
    """Uniform mesh x_i = x_min + i*dx, i = 0..n_points-1."""
    x_min: float
    x_max: float
    dx: float
    n_points: int

    @property
    def x(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.n_points, dtype=float)

    @property
    def n_cells(self) -> int:
        return self.n_points - 1

    @property
    def length(self) -> float:
        return self.x_max - self.x_min


def make_grid(x_min: float, x_max: float, dx: float) -> Grid:
    """
    Build a uniform grid covering [x_min, x_max] with spacing dx.

    Rejects non-positive dx, domains that are not an integer number of
    cells (rather than silently adjusting dx) and grids with fewer than
    three points.
    """
    if not dx > 0:
        raise ConfigError(f"Grid spacing must be positive, got dx={dx}")
    if not x_max > x_min:
        raise ConfigError(f"Domain must satisfy x_max > x_min, got [{x_min}, {x_max}]")

    ratio = (x_max - x_min) / dx
    cells = round(ratio)
    if abs(ratio - cells) > COMMENSURABILITY_TOLERANCE:
        raise ConfigError(
            f"Domain length {x_max - x_min} is not a multiple of dx={dx}",
            details={"cells": ratio},
        )
    n_points = int(cells) + 1
    if n_points < 3:
        raise ConfigError(f"Grid needs at least 3 points, got {n_points}")
    return Grid(x_min=float(x_min), x_max=float(x_max), dx=float(dx), n_points=n_points)


@dataclass
class Profile:
    """
    Solution values at one time level with Dirichlet-pinned end states.

    values[0] == left_state and values[-1] == right_state always hold;
    the constructor enforces the pinning.
    """
    values: np.ndarray
    left_state: float = 1.0
    right_state: float = 0.0

    def __post_init__(self):
        self.values = np.array(self.values, dtype=float)
        if self.values.ndim != 1 or self.values.size < 3:
            raise ValueError(f"Profile needs a 1D array of at least 3 values, got shape {self.values.shape}")
        if self.left_state == self.right_state:
            raise ValueError("Profile end states must differ")
        self.values[0] = self.left_state
        self.values[-1] = self.right_state

    @property
    def jump(self) -> float:
        return self.values[-1] - self.values[0]

    def with_values(self, values: np.ndarray) -> "Profile":
        return Profile(values, self.left_state, self.right_state)

    def copy(self) -> "Profile":
        return self.with_values(self.values.copy())

    def __len__(self) -> int:
        return self.values.size

    @classmethod
    def sample(cls, func, grid: Grid, left_state: float = 1.0, right_state: float = 0.0) -> "Profile":
        """Discretize a scalar or vectorized function on the grid nodes."""
        values = np.asarray(func(grid.x), dtype=float)
        if values.shape != (grid.n_points,):
            values = np.array([func(x) for x in grid.x], dtype=float)
        return cls(values, left_state, right_state)
