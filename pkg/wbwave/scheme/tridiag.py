"""
Tridiagonal Solver

Thomas' algorithm without pivoting. The sweep is compiled with numba; the
wrapper validates shapes and turns a vanishing pivot into PivotError.
"""
from dataclasses import dataclass

import numpy as np
from numba import njit

from ..errors import PivotError

PIVOT_FLOOR = 1e-300


@dataclass
class TridiagonalSystem:
    """
    Rows lower[i] x[i-1] + diagonal[i] x[i] + upper[i] x[i+1] = rhs[i].

    All four arrays have the same length; lower[0] and upper[-1] are ignored.
    """
    lower: np.ndarray
    diagonal: np.ndarray
    upper: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        self.lower = np.ascontiguousarray(self.lower, dtype=float)
        self.diagonal = np.ascontiguousarray(self.diagonal, dtype=float)
        self.upper = np.ascontiguousarray(self.upper, dtype=float)
        self.rhs = np.ascontiguousarray(self.rhs, dtype=float)
        n = self.diagonal.size
        if not (self.lower.size == self.upper.size == self.rhs.size == n):
            raise ValueError(
                f"Inconsistent tridiagonal lengths: lower={self.lower.size}, "
                f"diagonal={n}, upper={self.upper.size}, rhs={self.rhs.size}"
            )

    @property
    def size(self) -> int:
        return self.diagonal.size

    def matvec(self, x: np.ndarray) -> np.ndarray:
        y = self.diagonal * x
        y[1:] += self.lower[1:] * x[:-1]
        y[:-1] += self.upper[:-1] * x[1:]
        return y

    def to_dense(self) -> np.ndarray:
        n = self.size
        dense = np.diag(self.diagonal)
        if n > 1:
            dense += np.diag(self.lower[1:], -1) + np.diag(self.upper[:-1], 1)
        return dense


@njit(cache=True)
def _thomas_sweep(lower, diagonal, upper, rhs, floor):
    n = diagonal.shape[0]
    c = np.empty(n)
    d = np.empty(n)
    x = np.empty(n)

    pivot = diagonal[0]
    if abs(pivot) < floor:
        return x, 0
    c[0] = upper[0] / pivot if n > 1 else 0.0
    d[0] = rhs[0] / pivot
    for i in range(1, n):
        pivot = diagonal[i] - lower[i] * c[i - 1]
        if abs(pivot) < floor:
            return x, i
        c[i] = upper[i] / pivot if i < n - 1 else 0.0
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / pivot

    x[n - 1] = d[n - 1]
    for i in range(n - 2, -1, -1):
        x[i] = d[i] - c[i] * x[i + 1]
    return x, -1


def thomas_solve(system: TridiagonalSystem) -> np.ndarray:
    """Solve the tridiagonal system; raises PivotError on a pivot below 1e-300."""
    if system.size == 0:
        return np.empty(0)
    x, bad_row = _thomas_sweep(system.lower, system.diagonal, system.upper, system.rhs, PIVOT_FLOOR)
    if bad_row >= 0:
        raise PivotError(
            f"Zero pivot in Thomas sweep at row {bad_row}",
            details={"row": int(bad_row), "size": system.size},
        )
    return x
