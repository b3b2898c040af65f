"""
Characteristic Roots

Classification of the frozen-coefficient cell operator
-sigma w' - w'' = F w through the roots of mu^2 + sigma mu + F = 0.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional
import math

# |Delta| below max(DOUBLE_ROOT_ABS, DOUBLE_ROOT_REL * sigma^2) counts as a double root.
DOUBLE_ROOT_ABS = 1e-12
DOUBLE_ROOT_REL = 1e-10


class RootCase(Enum):
    TWO_REAL = "two_real"
    DOUBLE = "double"
    COMPLEX_PAIR = "complex_pair"


@dataclass(frozen=True)
class RootSet:
    """
    Roots of the characteristic polynomial.

    Only the fields of the active case are set: (mu_minus, mu_plus) for
    TWO_REAL, mu for DOUBLE, (real_part, frequency) for COMPLEX_PAIR.
    """
    discriminant: float
    case: RootCase
    mu_minus: Optional[float] = None
    mu_plus: Optional[float] = None
    mu: Optional[float] = None
    real_part: Optional[float] = None
    frequency: Optional[float] = None


def is_double_root(sigma: float, discriminant: float) -> bool:
    return abs(discriminant) <= max(DOUBLE_ROOT_ABS, DOUBLE_ROOT_REL * sigma * sigma)


def characteristic_roots(sigma: float, F: float) -> RootSet:
    """
    Roots of mu^2 + sigma mu + F = 0 with Delta = sigma^2 - 4F.

    Real roots are computed with the cancellation-free pairing
    q = -(sigma + sign(sigma) sqrt(Delta))/2, roots {q, F/q}. The
    complex pair is (-sigma +- i sqrt(-Delta))/2, hence frequency sqrt(-Delta)/2.
    """
    discriminant = sigma * sigma - 4.0 * F
    if is_double_root(sigma, discriminant):
        return RootSet(discriminant=discriminant, case=RootCase.DOUBLE, mu=-0.5 * sigma)

    if discriminant > 0:
        root = math.sqrt(discriminant)
        q = -0.5 * (sigma + math.copysign(root, sigma))
        other = F / q if q != 0.0 else 0.0
        mu_minus, mu_plus = sorted((q, other))
        return RootSet(
            discriminant=discriminant,
            case=RootCase.TWO_REAL,
            mu_minus=mu_minus,
            mu_plus=mu_plus,
        )

    return RootSet(
        discriminant=discriminant,
        case=RootCase.COMPLEX_PAIR,
        real_part=-0.5 * sigma,
        frequency=0.5 * math.sqrt(-discriminant),
    )
