"""
Convergence Tables

Final LeVeque-Yee speed against mesh size, as in a dx-refinement study.
"""
from dataclasses import dataclass
from typing import Iterable, List, Tuple
import logging

import numpy as np

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvergenceRow:
    dx: float
    sigma: float
    error: float
    sign: int

    def as_list(self) -> list:
        return [self.dx, self.sigma, self.error, self.sign]


def convergence_table(results: Iterable[Tuple[float, float]], target: float) -> List[ConvergenceRow]:
    """Rows (dx, sigma, sigma - target, sign) sorted by dx descending."""
    results = list(results)
    if len(results) < 2:
        raise ValueError(f"A convergence table needs at least 2 results, got {len(results)}")

    rows = []
    for dx, sigma in sorted(results, key=lambda r: r[0], reverse=True):
        error = float(sigma) - target
        rows.append(ConvergenceRow(dx=float(dx), sigma=float(sigma), error=error, sign=int(np.sign(error))))
    return rows


def sign_changes(rows: List[ConvergenceRow]) -> List[float]:
    """Mesh sizes at which sigma - target changes sign relative to the coarser row."""
    changes = []
    for coarse, fine in zip(rows, rows[1:]):
        if coarse.sign and fine.sign and coarse.sign != fine.sign:
            changes.append(fine.dx)
    if changes:
        logger.info(f"Sign of sigma - target changes at dx={changes}")
    return changes
