"""
Cell Operator

Closed-form solution of the frozen-coefficient two-point problem

    -sigma w' - w'' = F w  on [0, h],   w(0) = u_left,  w(h) = u_right.

Writing w(z) = exp(-sigma z / 2) v(z) turns the problem into v'' = kappa v
with kappa = Delta / 4 = sigma^2/4 - F. Its fundamental pair

    C(z)  = cosh(k z),      cos(w z),      1
    Sn(z) = sinh(k z) / k,  sin(w z) / w,  z

(kappa > 0, kappa < 0, kappa = 0) covers the three discriminant cases, and

    w(z) = [exp(-sigma z/2) Sn(h-z) u_left + exp(sigma (h-z)/2) Sn(z) u_right] / Sn(h).

Every quantity is evaluated in local coordinates, so results depend on
(sigma, F, h, delta) only. All functions accept a scalar F or an array of
per-cell factors.
"""
from dataclasses import dataclass
from typing import Tuple, Union
import math

import numpy as np

from ..errors import ResonanceError
from .roots import DOUBLE_ROOT_ABS, DOUBLE_ROOT_REL

ArrayLike = Union[float, np.ndarray]

# Below sqrt(|kappa|) h <= SERIES_THRESHOLD the kernels use their Taylor series.
SERIES_THRESHOLD = 1e-4
RESONANCE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class CellOperator:
    """
    Flux matrix of one cell.

    S[0] gives the left flux L = w'(0+), S[1] the right flux R = w'(h-),
    both as weights on (u_i, u_{i+1}).
    """
    S: np.ndarray
    sigma: float
    F: float
    h: float

    def fluxes(self, u_left: float, u_right: float) -> Tuple[float, float]:
        left, right = self.S @ np.array([u_left, u_right], dtype=float)
        return float(left), float(right)


@dataclass(frozen=True)
class ShiftRow:
    """Weights on (u_i, u_{i+1}) giving the cell solution at offset delta."""
    T: np.ndarray
    delta: float


def _effective_kappa(sigma: float, F: ArrayLike) -> np.ndarray:
    kappa = 0.25 * sigma * sigma - np.asarray(F, dtype=float)
    band = max(DOUBLE_ROOT_ABS, DOUBLE_ROOT_REL * sigma * sigma)
    return np.where(np.abs(4.0 * kappa) <= band, 0.0, kappa)


def fundamental_pair(kappa: ArrayLike, z: ArrayLike, h: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Evaluate (C(z), Sn(z)) for v'' = kappa v.

    The branch is chosen per cell from sqrt(|kappa|) h so that every point
    of a cell is evaluated with the same formula.
    """
    kappa, z = np.broadcast_arrays(np.asarray(kappa, dtype=float), np.asarray(z, dtype=float))
    c = np.empty(kappa.shape)
    s = np.empty(kappa.shape)

    root = np.sqrt(np.abs(kappa))
    series = root * h <= SERIES_THRESHOLD
    growing = (kappa > 0) & ~series
    oscillating = (kappa < 0) & ~series

    if np.any(series):
        zs = z[series]
        x = kappa[series] * zs * zs
        c[series] = 1.0 + 0.5 * x * (1.0 + x / 12.0 * (1.0 + x / 30.0))
        s[series] = zs * (1.0 + x / 6.0 * (1.0 + x / 20.0 * (1.0 + x / 42.0)))
    if np.any(growing):
        k = root[growing]
        kz = k * z[growing]
        c[growing] = np.cosh(kz)
        s[growing] = np.sinh(kz) / k
    if np.any(oscillating):
        w = root[oscillating]
        wz = w * z[oscillating]
        c[oscillating] = np.cos(wz)
        s[oscillating] = np.sin(wz) / w

    return c, s


def _check_resonance(sigma: float, F: ArrayLike, kappa: np.ndarray, h: float):
    phase = np.sqrt(np.clip(-kappa, 0.0, None)) * h
    multiple = np.round(phase / math.pi)
    resonant = (kappa < 0) & (multiple >= 1) & (np.abs(phase - multiple * math.pi) <= RESONANCE_TOLERANCE)
    if np.any(resonant):
        first = int(np.flatnonzero(np.atleast_1d(resonant))[0])
        F_bad = float(np.atleast_1d(np.asarray(F, dtype=float))[first]) if np.ndim(F) else float(F)
        raise ResonanceError(
            f"Singular cell problem: sigma={sigma}, F={F_bad}, h={h} resonates",
            details={"sigma": sigma, "F": F_bad, "h": h, "cell": first},
        )


def flux_coefficients(sigma: float, F: ArrayLike, h: float) -> Tuple[np.ndarray, ...]:
    """
    Entries (s00, s01, s10, s11) of S for every factor in F.

        L = s00 u_i + s01 u_{i+1},   R = s10 u_i + s11 u_{i+1}
    """
    if not h > 0:
        raise ValueError(f"Cell width must be positive, got h={h}")
    kappa = _effective_kappa(sigma, F)
    _check_resonance(sigma, F, kappa, h)

    c_h, s_h = fundamental_pair(kappa, h, h)
    ratio = c_h / s_h
    half = 0.5 * sigma
    growth = math.exp(half * h)

    s00 = -(half + ratio)
    s01 = growth / s_h
    s10 = -1.0 / (growth * s_h)
    s11 = ratio - half
    return s00, s01, s10, s11


def shift_weights(sigma: float, F: ArrayLike, h: float, delta: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    """Weights (t0, t1) of the cell solution at local offset delta for every factor in F."""
    if not h > 0:
        raise ValueError(f"Cell width must be positive, got h={h}")
    delta = np.asarray(delta, dtype=float)
    if np.any(delta < 0) or np.any(delta > h):
        raise ValueError(f"Offset must lie in [0, h={h}], got {delta}")
    kappa = _effective_kappa(sigma, F)
    _check_resonance(sigma, F, kappa, h)

    _, s_h = fundamental_pair(kappa, h, h)
    _, s_rest = fundamental_pair(kappa, h - delta, h)
    _, s_delta = fundamental_pair(kappa, delta, h)

    half = 0.5 * sigma
    t0 = np.exp(-half * delta) * s_rest / s_h
    t1 = np.exp(half * (h - delta)) * s_delta / s_h
    return t0, t1


def flux_matrix(sigma: float, F: float, h: float) -> CellOperator:
    """Flux matrix S mapping boundary values to (w'(0+), w'(h-))."""
    s00, s01, s10, s11 = flux_coefficients(sigma, float(F), h)
    S = np.array([[float(s00), float(s01)], [float(s10), float(s11)]])
    return CellOperator(S=S, sigma=float(sigma), F=float(F), h=float(h))


def shift_row(sigma: float, F: float, h: float, delta: float) -> ShiftRow:
    """Row T with T . (u_i, u_{i+1}) = cell solution at z_i + delta."""
    t0, t1 = shift_weights(sigma, float(F), h, float(delta))
    return ShiftRow(T=np.array([float(t0), float(t1)]), delta=float(delta))


def cell_eval(sigma: float, F: float, h: float, u_left: float, u_right: float, z: float) -> float:
    """Value of the frozen-coefficient cell solution at local position z."""
    row = shift_row(sigma, F, h, z)
    return float(row.T[0] * u_left + row.T[1] * u_right)
