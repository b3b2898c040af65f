"""
LeVeque-Yee Speed Estimate

Discrete form of sigma = -(integral of u_t dx) / (u(+inf) - u(-inf)).
"""
from dataclasses import dataclass
import math

from ..errors import NumericalError
from ..model.grid import Profile


@dataclass(frozen=True)
class SpeedEstimate:
    """sigma_hat = (dx/dt) * numerator_mass_change / denominator_jump."""
    sigma_hat: float
    numerator_mass_change: float
    denominator_jump: float

    @classmethod
    def at_rest(cls, curr: Profile) -> "SpeedEstimate":
        """Estimate used before two time levels exist."""
        return cls(sigma_hat=0.0, numerator_mass_change=0.0, denominator_jump=float(curr.jump))


def mass_change(prev: Profile, curr: Profile) -> float:
    """
    Sum of (prev_i - curr_i) over every stored node, boundaries included.

    math.fsum is correctly rounded, so the value is a pure function of the
    two stored profiles.
    """
    return math.fsum(prev.values - curr.values)


def leveque_yee(prev: Profile, curr: Profile, dx: float, dt: float) -> SpeedEstimate:
    """Speed estimate from two consecutive stationary-frame profiles dt apart."""
    if not dt > 0:
        raise ValueError(f"Time step must be positive, got dt={dt}")
    if len(prev) != len(curr):
        raise ValueError(f"Profiles live on different grids ({len(prev)} vs {len(curr)} points)")

    jump = float(curr.values[-1] - curr.values[0])
    if jump == 0.0:
        raise NumericalError("LeVeque-Yee denominator vanished: end states are equal")

    numerator = mass_change(prev, curr)
    sigma_hat = (dx / dt) * numerator / jump
    return SpeedEstimate(sigma_hat=sigma_hat, numerator_mass_change=numerator, denominator_jump=jump)
