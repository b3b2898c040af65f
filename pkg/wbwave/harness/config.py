"""
Experiment Configuration

Single source of truth for one run. Plain-text `key = value` files and
YAML mappings are both validated by the same pydantic model, so defaults
and invariants are identical whatever the source.
"""
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional
import logging

import yaml
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from ..errors import ConfigError, OutputError
from ..model.grid import Grid, make_grid
from ..model.initial import SIGMOID_CENTER
from ..model.reaction import ReactionKind, ReactionModel, minimal_wave_speed
from ..scheme.timestep import Integrator, StepConfig

logger = logging.getLogger(__name__)


class SchemeName(str, Enum):
    WB_IMPLICIT = "wb_implicit"
    WB_IMPLICIT_PARABOLIC = "wb_implicit_parabolic"
    WB_EXPLICIT = "wb_explicit"
    OS = "os"
    ZERO_WAVE_IMPLICIT = "zero_wave_implicit"
    ZERO_WAVE_EXPLICIT = "zero_wave_explicit"

    @property
    def is_moving_frame(self) -> bool:
        return self in (SchemeName.WB_IMPLICIT, SchemeName.WB_IMPLICIT_PARABOLIC, SchemeName.WB_EXPLICIT)

    @property
    def is_zero_wave(self) -> bool:
        return self in (SchemeName.ZERO_WAVE_IMPLICIT, SchemeName.ZERO_WAVE_EXPLICIT)

    @property
    def integrator(self) -> Integrator:
        if self in (SchemeName.WB_EXPLICIT, SchemeName.ZERO_WAVE_EXPLICIT):
            return Integrator.EXPLICIT_WB
        return Integrator.IMPLICIT_WB


class InitialKind(str, Enum):
    SIGMOID = "sigmoid"
    EXACT_PUSHED_FRONT = "exact_pushed_front"
    FROM_FILE = "from_file"


# Default dt caps per scheme; the small-step and splitting runs use 0.05,
# the others fall back to dx.
SMALL_STEP_CAP = 0.05


class ExperimentConfig(BaseModel):
    """
    Configuration of one simulation run.

    Every field has a documented default; unknown keys are rejected.
    """
    model_config = ConfigDict(extra="forbid", use_enum_values=False, validate_assignment=True)

    model: ReactionKind = ReactionKind.FKPP
    a: float = 0.0
    scheme: SchemeName = SchemeName.WB_IMPLICIT
    x_min: float = 0.0
    x_max: float = 3080.0
    dx: float = 0.5
    t_end: float = 1500.0
    dt_cap: Optional[float] = None
    cfl_safety: float = 1.0
    sigma_floor: float = 1e-6
    record_cadence: float = 1.0
    level_c: float = 0.5
    initial: InitialKind = InitialKind.SIGMOID
    initial_file: Optional[str] = None
    front_position: float = SIGMOID_CENTER
    left_state: float = 1.0
    right_state: float = 0.0
    snapshots: int = 5
    same_dt: bool = False
    budget: Optional[int] = None
    require_domain_margin: bool = False
    svg: bool = True
    output_dir: str = "runs/default"

    @field_validator("dx")
    @classmethod
    def _dx_positive(cls, v: float) -> float:
        if not v > 0:
            raise ValueError("invariant dx > 0 violated")
        return v

    @field_validator("t_end")
    @classmethod
    def _t_end_non_negative(cls, v: float) -> float:
        if v < 0:
            raise ValueError("invariant t_end >= 0 violated")
        return v

    @field_validator("a")
    @classmethod
    def _a_non_negative(cls, v: float) -> float:
        if v < 0:
            raise ValueError("invariant a >= 0 violated")
        return v

    @field_validator("dt_cap", "record_cadence", "sigma_floor")
    @classmethod
    def _positive_or_none(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and not v > 0:
            raise ValueError("invariant value > 0 violated")
        return v

    @field_validator("cfl_safety")
    @classmethod
    def _cfl_in_unit_interval(cls, v: float) -> float:
        if not 0 < v <= 1:
            raise ValueError("invariant 0 < cfl_safety <= 1 violated")
        return v

    @field_validator("level_c")
    @classmethod
    def _level_in_open_unit_interval(cls, v: float) -> float:
        if not 0 < v < 1:
            raise ValueError("invariant 0 < level_c < 1 violated")
        return v

    @field_validator("snapshots")
    @classmethod
    def _snapshots_non_negative(cls, v: int) -> int:
        if v < 0:
            raise ValueError("invariant snapshots >= 0 violated")
        return v

    @field_validator("budget")
    @classmethod
    def _budget_positive(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v <= 0:
            raise ValueError("invariant budget > 0 violated")
        return v

    @model_validator(mode="after")
    def _check_consistency(self) -> "ExperimentConfig":
        if not self.x_max > self.x_min:
            raise ValueError("invariant x_max > x_min violated")
        if self.left_state == self.right_state:
            raise ValueError("invariant left_state != right_state violated")
        if self.initial is InitialKind.FROM_FILE and not self.initial_file:
            raise ValueError("initial = from_file requires initial_file")
        if self.initial is InitialKind.EXACT_PUSHED_FRONT and not (self.model is ReactionKind.CUBIC and self.a > 2):
            raise ValueError("initial = exact_pushed_front requires model = cubic with a > 2")
        if self.require_domain_margin:
            travelled = minimal_wave_speed(self.reaction_model()) * self.t_end
            if not self.x_max - self.x_min > travelled + (self.front_position - self.x_min):
                raise ValueError(
                    f"invariant domain length > front position + sigma* t_end violated "
                    f"({self.x_max - self.x_min} <= {travelled + self.front_position - self.x_min})"
                )
        return self

    def reaction_model(self) -> ReactionModel:
        return ReactionModel(kind=self.model, a=self.a if self.model is ReactionKind.CUBIC else 0.0)

    def grid(self) -> Grid:
        return make_grid(self.x_min, self.x_max, self.dx)

    def resolved_dt_cap(self) -> float:
        if self.dt_cap is not None:
            return self.dt_cap
        if self.scheme in (SchemeName.WB_IMPLICIT_PARABOLIC, SchemeName.OS) and not self.same_dt:
            return SMALL_STEP_CAP
        return self.dx

    def step_config(self) -> StepConfig:
        parabolic = self.same_dt or self.scheme is SchemeName.WB_IMPLICIT_PARABOLIC
        return StepConfig(
            integrator=self.scheme.integrator,
            dt_cap=self.resolved_dt_cap(),
            cfl_safety=self.cfl_safety,
            sigma_floor=self.sigma_floor,
            parabolic_limit=parabolic,
        )

    def as_plain_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")


def _validation_error(e: ValidationError, key_lines: Dict[str, int]) -> ConfigError:
    first = e.errors()[0]
    key = str(first["loc"][0]) if first.get("loc") else None
    message = first["msg"].removeprefix("Value error, ")
    if key:
        message = f"{key}: {message}"
    return ConfigError(message, line=key_lines.get(key) if key else None, details={"errors": e.errors()})


def build_config(values: Dict[str, Any], key_lines: Optional[Dict[str, int]] = None) -> ExperimentConfig:
    """Validate a mapping of overrides into an ExperimentConfig."""
    key_lines = key_lines or {}
    unknown = [k for k in values if k not in ExperimentConfig.model_fields]
    if unknown:
        key = unknown[0]
        raise ConfigError(f"Unknown key: {key}", line=key_lines.get(key), details={"key": key})
    try:
        return ExperimentConfig(**values)
    except ValidationError as e:
        raise _validation_error(e, key_lines) from e


def parse_config(text: str) -> ExperimentConfig:
    """
    Parse `key = value` lines ('#' starts a comment) into a config.

    Values are handed to pydantic as strings, which accepts decimal and
    scientific notation for numbers and true/false for flags.
    """
    values: Dict[str, Any] = {}
    key_lines: Dict[str, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"Malformed line, expected 'key = value': {raw.strip()!r}", line=number)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key or not value:
            raise ConfigError(f"Malformed line, empty key or value: {raw.strip()!r}", line=number)
        if key not in ExperimentConfig.model_fields:
            raise ConfigError(f"Unknown key: {key}", line=number, details={"key": key})
        if key in values:
            raise ConfigError(f"Duplicate key: {key} (first set on line {key_lines[key]})", line=number)
        values[key] = value
        key_lines[key] = number
    return build_config(values, key_lines)


def load_config(path: str) -> ExperimentConfig:
    """Load a `.yml`/`.yaml` mapping or a plain `key = value` file."""
    config_path = Path(path)
    try:
        text = config_path.read_text()
    except OSError as e:
        raise OutputError(f"Cannot read config file: {e}", path=str(config_path)) from e

    if config_path.suffix in (".yml", ".yaml"):
        data = yaml.safe_load(text) or {}
        if not isinstance(data, dict):
            raise ConfigError(f"YAML config must be a mapping, got {type(data).__name__}")
        logger.info(f"Loaded YAML config {config_path}")
        return build_config(data)

    logger.info(f"Loaded key-value config {config_path}")
    return parse_config(text)
