"""
Run Records

Time series collected while a scheme runs: time, step, LeVeque-Yee
speed and tracked level-set position, plus sparse profile snapshots.
"""
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from ..model.grid import Profile


@dataclass
class RunRecord:
    """
    Time-aligned series of one run.

    times are strictly increasing; every series has one entry per
    recorded time.
    """
    level_c: float = 0.5
    times: List[float] = field(default_factory=list)
    dts: List[float] = field(default_factory=list)
    ly_speeds: List[float] = field(default_factory=list)
    level_positions: List[float] = field(default_factory=list)
    snapshots: List[Tuple[float, Profile]] = field(default_factory=list)

    def append(self, t: float, dt: float, sigma_ly: float, x_c: float):
        if self.times and not t > self.times[-1]:
            raise ValueError(f"Record times must increase strictly: {t} after {self.times[-1]}")
        self.times.append(float(t))
        self.dts.append(float(dt))
        self.ly_speeds.append(float(sigma_ly))
        self.level_positions.append(float(x_c))

    def add_snapshot(self, t: float, profile: Profile):
        self.snapshots.append((float(t), profile.copy()))

    def __len__(self) -> int:
        return len(self.times)

    @property
    def is_empty(self) -> bool:
        return not self.times

    def arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        return (
            np.asarray(self.times, dtype=float),
            np.asarray(self.dts, dtype=float),
            np.asarray(self.ly_speeds, dtype=float),
            np.asarray(self.level_positions, dtype=float),
        )

    @property
    def final_speed(self) -> float:
        return self.ly_speeds[-1] if self.ly_speeds else float("nan")

    @property
    def final_position(self) -> float:
        return self.level_positions[-1] if self.level_positions else float("nan")
