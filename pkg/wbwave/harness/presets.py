"""
Experiment Presets

Named studies: each expands to one config per (scheme, dx) on a
dx sweep over {2^-1, ..., 2^-6}, sigmoid initial data and t_end = 1500.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence
import logging

from ..errors import ConfigError
from .config import ExperimentConfig, SchemeName, build_config

logger = logging.getLogger(__name__)

DX_SWEEP = tuple(2.0 ** -k for k in range(1, 7))
STUDY_DOMAIN = (0.0, 3080.0)
EXTENDED_X_MAX = 6080.0
STUDY_T_END = 1500.0

ALL_SCHEMES = (
    SchemeName.WB_IMPLICIT,
    SchemeName.WB_EXPLICIT,
    SchemeName.OS,
    SchemeName.ZERO_WAVE_IMPLICIT,
    SchemeName.ZERO_WAVE_EXPLICIT,
)
DELAY_SCHEMES = (SchemeName.WB_IMPLICIT, SchemeName.WB_IMPLICIT_PARABOLIC, SchemeName.OS)


@dataclass(frozen=True)
class Preset:
    """A named study: base overrides, the schemes compared and the dx sweep."""
    name: str
    description: str
    overrides: Dict[str, Any]
    schemes: Sequence[SchemeName]
    dx_values: Sequence[float] = DX_SWEEP
    speed_study: bool = False


PRESETS: Dict[str, Preset] = {
    "fkpp_speed": Preset(
        name="fkpp_speed",
        description="FKPP asymptotic speed against dx for all schemes",
        overrides={"model": "fkpp"},
        schemes=ALL_SCHEMES,
        speed_study=True,
    ),
    "fkpp_bramson": Preset(
        name="fkpp_bramson",
        description="FKPP logarithmic delay coefficient (expected -3/2)",
        overrides={"model": "fkpp"},
        schemes=DELAY_SCHEMES,
    ),
    "cubic_pulled": Preset(
        name="cubic_pulled",
        description="Cubic reaction, a=1: pulled speed and delay (expected 2, -3/2)",
        overrides={"model": "cubic", "a": 1.0},
        schemes=DELAY_SCHEMES,
        speed_study=True,
    ),
    "cubic_pushmi_pullyu": Preset(
        name="cubic_pushmi_pullyu",
        description="Cubic reaction, a=2: critical speed and delay (expected 2, -1/2)",
        overrides={"model": "cubic", "a": 2.0},
        schemes=DELAY_SCHEMES,
        speed_study=True,
    ),
    "cubic_pushed": Preset(
        name="cubic_pushed",
        description="Cubic reaction, a=3: pushed speed (expected 2.041241), no logarithmic delay",
        # The pushed front travels ~3062 in t=1500, so the domain is widened.
        overrides={"model": "cubic", "a": 3.0, "x_max": 3280.0},
        schemes=DELAY_SCHEMES,
        speed_study=True,
    ),
}


def list_presets() -> List[Dict[str, Any]]:
    return [
        {"name": p.name, "description": p.description, "schemes": [s.value for s in p.schemes]}
        for p in PRESETS.values()
    ]


def _dx_label(dx: float) -> str:
    return format(dx, "g").replace(".", "p")


def expand_preset(
    name: str,
    dx: Optional[Sequence[float]] = None,
    t_end: Optional[float] = None,
    schemes: Optional[Sequence[str]] = None,
    budget: Optional[int] = None,
    same_dt: bool = False,
    max_cells: Optional[int] = None,
    output_dir: str = "runs",
) -> List[ExperimentConfig]:
    """
    One config per (scheme, dx), each writing to <output_dir>/<preset>/<scheme>_dx<dx>.

    Coarse OS and 0-wave entries (dx >= 1/2) use the domain [0, 6080].

    Args:
        name: Preset name, one of PRESETS
        dx: Mesh sizes replacing the preset sweep
        t_end: Final time replacing 1500
        schemes: Scheme names replacing the preset schemes
        budget: Step cap per run
        same_dt: Impose the most restrictive step rule on every scheme
        max_cells: Drop entries whose grid would exceed that many cells
        output_dir: Root of the run directories

    Returns:
        Validated configs in scheme-major, dx-minor order
    """
    if name not in PRESETS:
        raise ConfigError(f"Unknown preset: {name} (available: {', '.join(PRESETS)})")
    preset = PRESETS[name]

    dx_values = list(dx) if dx else list(preset.dx_values)
    scheme_values = [SchemeName(s) for s in schemes] if schemes else list(preset.schemes)
    final_time = STUDY_T_END if t_end is None else t_end

    configs = []
    for scheme in scheme_values:
        for step in dx_values:
            values: Dict[str, Any] = {
                "x_min": STUDY_DOMAIN[0],
                "x_max": STUDY_DOMAIN[1],
                "t_end": final_time,
                "initial": "sigmoid",
                **preset.overrides,
                "scheme": scheme,
                "dx": step,
                "same_dt": same_dt,
                "budget": budget,
                "output_dir": str(Path(output_dir) / name / f"{scheme.value}_dx{_dx_label(step)}"),
            }
            if step >= 0.5 and (scheme is SchemeName.OS or scheme.is_zero_wave):
                values["x_max"] = max(values["x_max"], EXTENDED_X_MAX)
            if preset.speed_study and t_end is None:
                values["require_domain_margin"] = True

            cells = (values["x_max"] - values["x_min"]) / step
            if max_cells is not None and cells > max_cells:
                logger.info(f"Skipping {scheme.value} dx={step}: {cells:.0f} cells exceeds --max-cells {max_cells}")
                continue
            configs.append(build_config(values))

    logger.info(f"Preset {name} expanded to {len(configs)} runs")
    return configs
