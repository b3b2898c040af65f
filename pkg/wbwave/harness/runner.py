"""
Simulation Runner

Drives one configured scheme from t = 0 to t_end, records the LeVeque-Yee
speed and the tracked level set, and writes the run directory.
"""
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Tuple
import logging
import time

import numpy as np

from ..analysis.delay_fit import MIN_SAMPLES, FitResult, fit_delay
from ..analysis.level_set import level_set_position, profile_error
from ..analysis.run_record import RunRecord
from ..errors import ConfigError, NumericalError, OutputError, RankDeficientError, StepBudgetExceeded
from ..model.grid import Profile
from ..model.initial import exact_pushed_front, sigmoid_initial
from ..model.reaction import Regime, minimal_wave_speed, regime
from ..reference.splitting import OSConfig, strang_step
from ..reference.zero_wave import zero_wave_step
from ..scheme.speed import leveque_yee
from ..scheme.timestep import clip_to_horizon, select_timestep
from ..scheme.wb_step import advance
from .budget import StepBudget
from .config import ExperimentConfig, InitialKind
from .outputs import emit_outputs

logger = logging.getLogger(__name__)


@dataclass
class RunSummary:
    """Headline numbers of one run, serialised to summary.yml."""
    scheme: str
    model: str
    a: float
    dx: float
    t_end: float
    t_reached: float
    steps: int
    final_speed: float
    final_position: float
    target_speed: float
    truncated: bool = False
    fit: Optional[Dict[str, Any]] = None
    profile_error: Optional[float] = None
    wall_seconds: float = 0.0
    output_dir: str = ""
    budget: Dict[str, Any] = field(default_factory=dict)

    @property
    def speed_error(self) -> float:
        return self.final_speed - self.target_speed

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunSummary":
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        return cls(**known)


def _load_initial_file(path: str, cfg: ExperimentConfig) -> np.ndarray:
    try:
        table = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    except OSError as e:
        raise OutputError(f"Cannot read initial data: {e}", path=path) from e
    except ValueError as e:
        raise ConfigError(f"Malformed initial data file {path}: {e}") from e

    grid = cfg.grid()
    if table.shape != (grid.n_points, 2):
        raise ConfigError(
            f"Initial data has shape {table.shape}, expected ({grid.n_points}, 2) columns x,u",
            details={"path": path},
        )
    if not np.allclose(table[:, 0], grid.x, rtol=0.0, atol=1e-9 * grid.dx):
        raise ConfigError(f"Initial data nodes in {path} do not match the configured grid")
    return table[:, 1]


def initial_profile(cfg: ExperimentConfig) -> Profile:
    """Initial datum on the configured grid with the configured end states."""
    grid = cfg.grid()
    if cfg.initial is InitialKind.SIGMOID:
        values = sigmoid_initial(grid.x)
    elif cfg.initial is InitialKind.EXACT_PUSHED_FRONT:
        values = exact_pushed_front(cfg.a, grid.x - cfg.front_position)
    else:
        values = _load_initial_file(cfg.initial_file, cfg)
    return Profile(values, left_state=cfg.left_state, right_state=cfg.right_state)


def snapshot_times(t_end: float, count: int) -> List[float]:
    """t_end * {0, 1/(count-1), ..., 1}; a single snapshot is the final one."""
    if count <= 0:
        return []
    if count == 1:
        return [t_end]
    return [t_end * k / (count - 1) for k in range(count)]


class Simulation:
    """
    One run of one scheme.

    Features:
    - Dispatch to the moving-frame WB, 0-wave WB or splitting step
    - Final step clipped onto t_end
    - Sampling of (t, dt, sigma_ly, x_c) at the recording cadence
    - Snapshots at evenly spaced times
    - Step budget with clean abort
    """

    def __init__(self, cfg: ExperimentConfig):
        self.cfg = cfg
        self.model = cfg.reaction_model()
        self.grid = cfg.grid()
        self.step_config = cfg.step_config()
        self.budget = StepBudget(cfg.budget)
        self.target_speed = minimal_wave_speed(self.model)
        self.record = RunRecord(level_c=cfg.level_c)
        self.truncated = False
        self.t = 0.0
        self.steps = 0

        self._prev: Optional[Profile] = None
        self._prev_dt: Optional[float] = None
        self._last_speed = 0.0
        self.final_profile: Optional[Profile] = None

    def _step(self, curr: Profile, remaining: float) -> Tuple[Profile, float]:
        scheme = self.cfg.scheme
        if scheme.is_moving_frame:
            outcome = advance(
                curr, self._prev, self.step_config, self.model, self.grid,
                prev_dt=self._prev_dt, horizon=remaining,
            )
            return outcome.profile, outcome.dt

        if scheme.is_zero_wave:
            dt = clip_to_horizon(select_timestep(0.0, self.grid.dx, self.step_config), remaining)
            return zero_wave_step(curr, dt, self.model, self.grid, scheme.integrator), dt

        # Splitting has no CFL; it only follows the shared step rule in same-dt mode.
        if self.cfg.same_dt:
            native = select_timestep(self._last_speed, self.grid.dx, self.step_config)
        else:
            native = self.cfg.resolved_dt_cap()
        dt = clip_to_horizon(native, remaining)
        values = strang_step(curr.values, OSConfig.for_model(self.model, dt), self.model, self.grid)
        return curr.with_values(values), dt

    def run(self) -> RunRecord:
        """Advance to t_end, or until the step budget runs out."""
        cfg = self.cfg
        curr = initial_profile(cfg)
        pending_snapshots = snapshot_times(cfg.t_end, cfg.snapshots)
        next_record = cfg.record_cadence

        if pending_snapshots and pending_snapshots[0] <= 0.0:
            self.record.add_snapshot(0.0, curr)
            pending_snapshots.pop(0)

        logger.info(
            f"Run {cfg.scheme.value}: {self.model.describe()}, dx={self.grid.dx:g}, "
            f"{self.grid.n_points} points, t_end={cfg.t_end:g}"
        )
        while self.t < cfg.t_end:
            remaining = cfg.t_end - self.t
            try:
                self.budget.record_step(cfg.scheme.value, self.t)
            except StepBudgetExceeded:
                self.truncated = True
                break

            try:
                new, dt = self._step(curr, remaining)
                speed = leveque_yee(curr, new, self.grid.dx, dt).sigma_hat
                t_new = cfg.t_end if dt >= remaining else self.t + dt
                last = t_new >= cfg.t_end

                if t_new >= next_record or last:
                    x_c = level_set_position(new, self.grid, cfg.level_c)
                    self.record.append(t_new, dt, speed, x_c)
                    while next_record <= t_new:
                        next_record += cfg.record_cadence
            except NumericalError as e:
                e.details.update({"step": self.steps, "t": self.t})
                logger.error(f"{cfg.scheme.value} failed at step {self.steps} (t={self.t:g}): {e}")
                raise

            self._prev, self._prev_dt = curr, dt
            self._last_speed = speed
            curr = new
            self.t = t_new
            self.steps += 1

            while pending_snapshots and self.t >= pending_snapshots[0]:
                self.record.add_snapshot(self.t, curr)
                pending_snapshots.pop(0)

        if self.truncated and not self.record.is_empty:
            self.record.add_snapshot(self.t, curr)
        self.final_profile = curr
        logger.info(
            f"Run {cfg.scheme.value} finished at t={self.t:g} after {self.steps} steps, "
            f"sigma_ly={self.record.final_speed:.12g}"
        )
        return self.record

    def fit(self) -> Optional[FitResult]:
        """Delay fit against sigma*, or None when the record is too short."""
        if len(self.record) < MIN_SAMPLES:
            return None
        try:
            return fit_delay(self.record, self.target_speed, self.cfg.level_c)
        except RankDeficientError as e:
            logger.warning(f"Delay fit skipped: {e}")
            return None

    def summarize(self, fit: Optional[FitResult], wall_seconds: float) -> RunSummary:
        error = None
        if regime(self.model) is Regime.PUSHED and not self.record.is_empty:
            error = profile_error(self.final_profile, self.grid, self.model.a, self.cfg.level_c)
        return RunSummary(
            scheme=self.cfg.scheme.value,
            model=self.model.kind.value,
            a=self.model.a,
            dx=self.grid.dx,
            t_end=self.cfg.t_end,
            t_reached=self.t,
            steps=self.steps,
            final_speed=self.record.final_speed,
            final_position=self.record.final_position,
            target_speed=self.target_speed,
            truncated=self.truncated,
            fit=fit.as_dict() if fit else None,
            profile_error=error,
            wall_seconds=wall_seconds,
            output_dir=self.cfg.output_dir,
            budget=self.budget.get_usage_report(),
        )


def execute_run(cfg: ExperimentConfig, write: bool = True) -> Tuple[RunRecord, RunSummary]:
    """Run, fit, summarise and (optionally) write the run directory."""
    started = time.perf_counter()
    simulation = Simulation(cfg)
    record = simulation.run()
    fit = simulation.fit()
    summary = simulation.summarize(fit, time.perf_counter() - started)

    if simulation.truncated:
        logger.warning(f"Run {cfg.scheme.value} truncated at t={simulation.t:g} by the step budget")
    if write:
        emit_outputs(
            record,
            fit,
            cfg.output_dir,
            grid=simulation.grid,
            summary=summary.as_dict(),
            config=cfg.as_plain_dict(),
            reference_speed=simulation.target_speed,
            svg=cfg.svg,
        )
    return record, summary


def run_experiment(cfg: ExperimentConfig) -> RunRecord:
    """Run one configured experiment and write its outputs to cfg.output_dir."""
    record, _ = execute_run(cfg)
    return record
