"""
Run Outputs

Writes a run directory:

    timeseries.csv      t, dt, sigma_ly, x_c (17 significant digits)
    snapshots/*.csv     x, u
    fit.txt             alpha, beta, gamma, residual_rms, window
    summary.yml         RunSummary
    config.yml          resolved ExperimentConfig
    chart.svg           sigma_ly(t) and x_c(t) - sigma* t
"""
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple
import csv
import logging

import numpy as np
import yaml
from jinja2 import Template

from ..analysis.delay_fit import FitResult
from ..analysis.run_record import RunRecord
from ..errors import OutputError
from ..model.grid import Grid

logger = logging.getLogger(__name__)

TIMESERIES_HEADER = ["t", "dt", "sigma_ly", "x_c"]
SNAPSHOT_HEADER = ["x", "u"]
FIT_KEYS = ("alpha", "beta", "gamma", "residual_rms", "window")

CHART_WIDTH = 720
PANEL_HEIGHT = 220
MARGIN = 48

CHART_TEMPLATE = Template(
    """<svg xmlns="http://www.w3.org/2000/svg" width="{{ width }}" height="{{ height }}" viewBox="0 0 {{ width }} {{ height }}">
  <rect width="100%" height="100%" fill="white"/>
{% for panel in panels %}
  <g transform="translate(0, {{ panel.offset }})">
    <text x="{{ margin }}" y="18" font-family="sans-serif" font-size="13">{{ panel.title }}</text>
    <rect x="{{ margin }}" y="24" width="{{ plot_width }}" height="{{ plot_height }}" fill="none" stroke="#999"/>
    <text x="4" y="36" font-family="monospace" font-size="10">{{ panel.y_max }}</text>
    <text x="4" y="{{ plot_height + 24 }}" font-family="monospace" font-size="10">{{ panel.y_min }}</text>
    <polyline fill="none" stroke="{{ panel.color }}" stroke-width="1.2" points="{{ panel.points }}"/>
  </g>
{% endfor %}
  <text x="{{ margin }}" y="{{ height - 8 }}" font-family="monospace" font-size="10">t in [{{ t_min }}, {{ t_max }}]</text>
</svg>
"""
)


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _polyline(t: np.ndarray, y: np.ndarray, plot_width: float, plot_height: float) -> Tuple[str, float, float]:
    finite = np.isfinite(y)
    t, y = t[finite], y[finite]
    if t.size == 0:
        return "", 0.0, 0.0
    t_span = (t.max() - t.min()) or 1.0
    y_min, y_max = float(y.min()), float(y.max())
    y_span = (y_max - y_min) or 1.0
    px = MARGIN + (t - t.min()) / t_span * plot_width
    py = 24 + plot_height - (y - y_min) / y_span * plot_height
    return " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(px, py)), y_min, y_max


def render_chart(record: RunRecord, reference_speed: float) -> str:
    """SVG with two stacked panels: sigma_ly(t) and x_c(t) - reference_speed t."""
    times, _, speeds, positions = record.arrays()
    plot_width = CHART_WIDTH - 2 * MARGIN
    plot_height = PANEL_HEIGHT - 40

    panels = []
    series = [
        ("LeVeque-Yee speed", speeds, "#1f77b4"),
        (f"x_c(t) - {reference_speed:.6g} t", positions - reference_speed * times, "#d62728"),
    ]
    for k, (title, values, color) in enumerate(series):
        points, y_min, y_max = _polyline(times, values, plot_width, plot_height)
        panels.append({
            "title": title,
            "points": points,
            "color": color,
            "offset": k * PANEL_HEIGHT,
            "y_min": f"{y_min:.6g}",
            "y_max": f"{y_max:.6g}",
        })

    return CHART_TEMPLATE.render(
        width=CHART_WIDTH,
        height=len(panels) * PANEL_HEIGHT + 20,
        margin=MARGIN,
        plot_width=plot_width,
        plot_height=plot_height,
        panels=panels,
        t_min=f"{times.min():g}" if times.size else "0",
        t_max=f"{times.max():g}" if times.size else "0",
    )


def format_fit(fit: FitResult) -> str:
    window = f"{_fmt(fit.window[0])} {_fmt(fit.window[1])}"
    lines = [
        f"alpha = {_fmt(fit.alpha)}",
        f"beta = {_fmt(fit.beta)}",
        f"gamma = {_fmt(fit.gamma)}",
        f"residual_rms = {_fmt(fit.residual_rms)}",
        f"window = {window}",
    ]
    return "\n".join(lines) + "\n"


def write_timeseries(record: RunRecord, path: Path):
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(TIMESERIES_HEADER)
        for row in zip(record.times, record.dts, record.ly_speeds, record.level_positions):
            writer.writerow([_fmt(v) for v in row])


def write_snapshots(record: RunRecord, grid: Grid, directory: Path) -> List[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for k, (t, profile) in enumerate(record.snapshots):
        path = directory / f"snapshot_{k:02d}_t{t:g}.csv"
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(SNAPSHOT_HEADER)
            for x, u in zip(grid.x, profile.values):
                writer.writerow([_fmt(x), _fmt(u)])
        paths.append(path)
    return paths


def emit_outputs(
    record: RunRecord,
    fit: Optional[FitResult],
    directory: str,
    grid: Optional[Grid] = None,
    summary: Optional[Dict[str, Any]] = None,
    config: Optional[Dict[str, Any]] = None,
    reference_speed: Optional[float] = None,
    svg: bool = True,
) -> List[Path]:
    """
    Write the run directory and return the paths written.

    Args:
        record: Recorded time series and snapshots
        fit: Delay fit written to fit.txt, if any
        directory: Run directory, created when missing
        grid: Grid of the snapshots; without it no snapshot is written
        summary: Mapping written to summary.yml
        config: Mapping written to config.yml
        reference_speed: Speed drawn on the chart; without it no chart is written
        svg: Write chart.svg

    Returns:
        Paths in the order they were written

    Raises:
        OutputError: On any filesystem failure, naming the path
    """
    out = Path(directory)
    target = out
    written: List[Path] = []
    try:
        out.mkdir(parents=True, exist_ok=True)

        target = out / "timeseries.csv"
        write_timeseries(record, target)
        written.append(target)

        if grid is not None and record.snapshots:
            target = out / "snapshots"
            written.extend(write_snapshots(record, grid, target))

        if fit is not None:
            target = out / "fit.txt"
            target.write_text(format_fit(fit))
            written.append(target)

        if summary is not None:
            target = out / "summary.yml"
            target.write_text(yaml.safe_dump(summary, default_flow_style=False, sort_keys=False))
            written.append(target)

        if config is not None:
            target = out / "config.yml"
            target.write_text(yaml.safe_dump(config, default_flow_style=False, sort_keys=False))
            written.append(target)

        if svg and reference_speed is not None and not record.is_empty:
            target = out / "chart.svg"
            target.write_text(render_chart(record, reference_speed))
            written.append(target)
    except OSError as e:
        logger.error(f"Failed to write {target}: {e}")
        raise OutputError(f"Cannot write run output: {e.strerror or e}", path=str(target)) from e

    logger.info(f"Wrote {len(written)} files to {out}")
    return written


def read_timeseries(path: str, level_c: float = 0.5) -> RunRecord:
    """Load a timeseries.csv back into a RunRecord (snapshots are not restored)."""
    record = RunRecord(level_c=level_c)
    try:
        with open(path, newline="") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            if header != TIMESERIES_HEADER:
                raise OutputError(f"Unexpected timeseries header {header}", path=path)
            for line, row in enumerate(reader, start=2):
                if not row:
                    continue
                if len(row) != len(TIMESERIES_HEADER):
                    raise OutputError(
                        f"Timeseries row on line {line} has {len(row)} columns, expected {len(TIMESERIES_HEADER)}",
                        path=path,
                    )
                record.append(*(float(v) for v in row))
    except OSError as e:
        raise OutputError(f"Cannot read timeseries: {e.strerror or e}", path=path) from e
    except ValueError as e:
        raise OutputError(f"Malformed timeseries row: {e}", path=path) from e
    return record


def read_summary(directory: str) -> Dict[str, Any]:
    path = Path(directory) / "summary.yml"
    try:
        data = yaml.safe_load(path.read_text())
    except OSError as e:
        raise OutputError(f"Cannot read run summary: {e.strerror or e}", path=str(path)) from e
    if not isinstance(data, dict):
        raise OutputError("Run summary is not a mapping", path=str(path))
    return data
