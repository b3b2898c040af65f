"""
Delay Fitting

Least-squares fit of m(t) = alpha ln t + beta + gamma / sqrt(t) to
y(t) = x_c(t) - sigma_ref t over the last half of a run. alpha estimates
the logarithmic delay coefficient (-3/2 pulled, -1/2 pushmi-pullyu,
0 pushed); beta absorbs the constant offset x_inf.
"""
from dataclasses import dataclass
from typing import Tuple
import logging

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from ..errors import RankDeficientError
from .run_record import RunRecord

logger = logging.getLogger(__name__)

MIN_SAMPLES = 10
BASIS_SIZE = 3


@dataclass(frozen=True)
class FitResult:
    alpha: float
    beta: float
    gamma: float
    residual_rms: float
    window: Tuple[float, float]

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "residual_rms": self.residual_rms,
            "window": list(self.window),
        }


def _scaled(column: np.ndarray) -> Tuple[np.ndarray, float, float]:
    center = float(np.mean(column))
    spread = float(np.max(np.abs(column - center)))
    if spread == 0.0:
        spread = 1.0
    return (column - center) / spread, center, spread


def fit_series(times: np.ndarray, y: np.ndarray) -> Tuple[np.ndarray, float]:
    """
    Coefficients (alpha, beta, gamma) of the delay model for samples (t, y).

    The normal equations use centred and scaled ln t and 1/sqrt(t) columns
    and are solved by Cholesky with one step of iterative refinement.
    """
    times = np.asarray(times, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(times <= 0):
        raise ValueError("Delay fit needs strictly positive times")
    if np.unique(times).size < BASIS_SIZE:
        raise RankDeficientError(
            f"Delay fit needs at least {BASIS_SIZE} distinct times, got {np.unique(times).size}",
            details={"samples": int(times.size)},
        )

    log_col, log_center, log_spread = _scaled(np.log(times))
    inv_col, inv_center, inv_spread = _scaled(1.0 / np.sqrt(times))
    basis = np.column_stack([log_col, np.ones_like(times), inv_col])

    gram = basis.T @ basis
    try:
        factor = cho_factor(gram)
    except LinAlgError as e:
        raise RankDeficientError(f"Delay-fit basis is rank deficient: {e}") from e
    if np.linalg.cond(gram) > 1e14:
        raise RankDeficientError("Delay-fit basis is numerically rank deficient",
                                 details={"condition": float(np.linalg.cond(gram))})

    scaled = cho_solve(factor, basis.T @ y)
    scaled += cho_solve(factor, basis.T @ (y - basis @ scaled))

    alpha = scaled[0] / log_spread
    gamma = scaled[2] / inv_spread
    beta = scaled[1] - alpha * log_center - gamma * inv_center

    model = alpha * np.log(times) + beta + gamma / np.sqrt(times)
    residual_rms = float(np.sqrt(np.mean((y - model) ** 2)))
    return np.array([alpha, beta, gamma]), residual_rms


def fit_delay(record: RunRecord, reference_speed: float, c: float = 0.5) -> FitResult:
    """
    Fit the delay model to x_c(t) - reference_speed * t for t >= t_end / 2.

    c names the level the record tracked; it is checked against the record.
    """
    if record.level_c != c:
        logger.warning(f"Fitting level c={c} but the record tracked c={record.level_c}")
    times, _, _, positions = record.arrays()
    if times.size < MIN_SAMPLES:
        raise RankDeficientError(
            f"Delay fit needs at least {MIN_SAMPLES} samples, got {times.size}",
            details={"samples": int(times.size)},
        )

    t_end = float(times[-1])
    window = times >= 0.5 * t_end
    t_window = times[window]
    coefficients, residual_rms = fit_series(t_window, positions[window] - reference_speed * t_window)
    alpha, beta, gamma = (float(v) for v in coefficients)

    logger.info(f"Delay fit on [{t_window[0]:g}, {t_end:g}]: alpha={alpha:.6f}, beta={beta:.6f}, gamma={gamma:.6f}")
    return FitResult(
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        residual_rms=residual_rms,
        window=(float(t_window[0]), t_end),
    )
