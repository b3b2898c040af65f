"""
Initial Data and Exact Fronts
"""
from typing import Union
import math

import numpy as np
from scipy.special import expit

ArrayLike = Union[float, np.ndarray]

SIGMOID_CENTER = 40.0
SIGMOID_STEEPNESS = 3.0


def sigmoid_initial(x: ArrayLike) -> ArrayLike:
    """
    Sigmoid initial datum u0(x) = 1 - 1/(1 + exp(-3(x - 40))).

    Evaluated as expit(-3(x - 40)), which is the same function without
    cancellation in the tail and without overflow for large |x|.
    """
    return expit(-SIGMOID_STEEPNESS * (np.asarray(x, dtype=float) - SIGMOID_CENTER))


def exact_pushed_front(a: float, xi: ArrayLike) -> ArrayLike:
    """
    Exact minimal-speed front of the cubic equation in the pushed regime.

    u(xi) = 1/(1 + exp(k xi)) with k = sqrt(a/2); it solves
    u'' + sigma* u' + u(1-u)(1+au) = 0 with sigma* = k + 1/k and u(0) = 1/2.
    """
    if not a > 2.0:
        raise ValueError(f"The exact pushed front requires a > 2, got a={a}")
    k = math.sqrt(a / 2.0)
    return expit(-k * np.asarray(xi, dtype=float))
