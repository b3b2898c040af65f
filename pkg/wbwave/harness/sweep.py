"""
Sweeps

Runs a list of independent configs, sequentially or in a process pool.
Each entry writes to its own output directory, so entries share nothing.
"""
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Sequence, Tuple
import logging

from ..analysis.convergence import ConvergenceRow, convergence_table
from .config import ExperimentConfig
from .runner import RunSummary, execute_run

logger = logging.getLogger(__name__)


def _run_entry(cfg: ExperimentConfig) -> RunSummary:
    _, summary = execute_run(cfg)
    return summary


def run_sweep(configs: Sequence[ExperimentConfig], workers: int = 1) -> List[RunSummary]:
    """Run every config; summaries come back in input order."""
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    if not configs:
        return []

    logger.info(f"Sweep of {len(configs)} runs on {workers} worker(s)")
    if workers == 1 or len(configs) == 1:
        return [_run_entry(cfg) for cfg in configs]

    with ProcessPoolExecutor(max_workers=min(workers, len(configs))) as pool:
        return list(pool.map(_run_entry, configs))


def group_by_scheme(summaries: Sequence[RunSummary]) -> Dict[str, List[RunSummary]]:
    groups: Dict[str, List[RunSummary]] = {}
    for summary in summaries:
        groups.setdefault(summary.scheme, []).append(summary)
    return groups


def convergence_tables(summaries: Sequence[RunSummary]) -> Tuple[Dict[str, List[ConvergenceRow]], List[str]]:
    """
    One convergence table per scheme against each run's minimal speed.

    Schemes with a single run cannot form a table and are returned
    separately.
    """
    tables: Dict[str, List[ConvergenceRow]] = {}
    skipped: List[str] = []
    for scheme, runs in group_by_scheme(summaries).items():
        if len(runs) < 2:
            skipped.append(scheme)
            continue
        targets = {run.target_speed for run in runs}
        if len(targets) > 1:
            logger.warning(f"Runs of {scheme} have different target speeds {sorted(targets)}; using the first")
        tables[scheme] = convergence_table([(run.dx, run.final_speed) for run in runs], runs[0].target_speed)
    return tables, skipped
