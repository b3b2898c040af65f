"""
Reaction Models

The nonlinearities f(u) of the supported equations together with their
growth factor F(u) = f(u)/u, stored as closed polynomials so that F is
finite at the leading edge u = 0.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Union
import math

import numpy as np

ArrayLike = Union[float, np.ndarray]

# Cubic coefficients this close to 2 are treated as the critical case.
CRITICAL_TOLERANCE = 1e-12


class ReactionKind(Enum):
    """Supported reaction terms."""
    FKPP = "fkpp"
    CUBIC = "cubic"


class Regime(Enum):
    """Qualitative propagation regime of the invading front."""
    PULLED = "pulled"
    PUSHMI_PULLYU = "pushmi_pullyu"
    PUSHED = "pushed"


@dataclass(frozen=True)
class ReactionModel:
    """
    Reaction term of u_t - u_xx = f(u).

    FKPP:  f(u) = u(1-u)
    Cubic: f(u) = u(1-u)(1+au), a >= 0
    """
    kind: ReactionKind = ReactionKind.FKPP
    a: float = 0.0

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", ReactionKind(self.kind))
        if self.a < 0:
            raise ValueError(f"Cubic coefficient must be non-negative, got a={self.a}")

    def reaction_rate(self, u: ArrayLike) -> ArrayLike:
        return u * self.growth_factor(u)

    def growth_factor(self, u: ArrayLike) -> ArrayLike:
        if self.kind is ReactionKind.FKPP:
            return 1.0 - u
        return (1.0 - u) * (1.0 + self.a * u)

    def reaction_derivative(self, u: ArrayLike) -> ArrayLike:
        """f'(u), used by Newton solves of implicit reaction steps."""
        if self.kind is ReactionKind.FKPP:
            return 1.0 - 2.0 * u
        return 1.0 + 2.0 * (self.a - 1.0) * u - 3.0 * self.a * u * u

    def describe(self) -> str:
        if self.kind is ReactionKind.FKPP:
            return "fkpp"
        return f"cubic(a={self.a:g})"


def reaction_rate(model: ReactionModel, u: ArrayLike) -> ArrayLike:
    """f(u): u(1-u) for FKPP, u(1-u)(1+au) for Cubic."""
    return model.reaction_rate(u)


def growth_factor(model: ReactionModel, u: ArrayLike) -> ArrayLike:
    """F(u) = f(u)/u evaluated by its polynomial form (no division)."""
    return model.growth_factor(u)


def minimal_wave_speed(model: ReactionModel) -> float:
    """
    Minimal traveling-wave speed sigma*.

    2 for FKPP and for Cubic with a <= 2, sqrt(a/2) + sqrt(2/a) otherwise.
    Both branches give 2 at a = 2.
    """
    if model.kind is ReactionKind.FKPP or model.a <= 2.0:
        return 2.0
    return math.sqrt(model.a / 2.0) + math.sqrt(2.0 / model.a)


def regime(model: ReactionModel) -> Regime:
    if model.kind is ReactionKind.FKPP:
        return Regime.PULLED
    if abs(model.a - 2.0) <= CRITICAL_TOLERANCE:
        return Regime.PUSHMI_PULLYU
    return Regime.PULLED if model.a < 2.0 else Regime.PUSHED


def expected_log_coefficient(model: ReactionModel) -> float:
    """
    Coefficient of ln(t) in the level-set expansion x_c(t) = sigma* t + alpha ln t + ...

    -3/2 in the pulled regime, -1/2 at the pushmi-pullyu transition, 0 when pushed.
    """
    return {
        Regime.PULLED: -1.5,
        Regime.PUSHMI_PULLYU: -0.5,
        Regime.PUSHED: 0.0,
    }[regime(model)]


def expected_speed_at(model: ReactionModel, t: float) -> float:
    """Front speed at time t predicted by differentiating the level-set expansion."""
    if t <= 0:
        raise ValueError(f"Time must be positive, got t={t}")
    return minimal_wave_speed(model) + expected_log_coefficient(model) / t
