"""
Step Budget

Tracks and enforces a cap on the number of time steps of a run.
"""
from typing import Any, Dict, Optional
import logging

from ..errors import StepBudgetExceeded

logger = logging.getLogger(__name__)


class StepBudget:
    """
    Counts steps taken per scheme and enforces an optional total cap.

    A budget of None is unlimited; the counts are still kept for the
    run summary.
    """

    def __init__(self, limit: Optional[int] = None):
        if limit is not None and limit <= 0:
            raise ValueError(f"Step budget must be positive, got {limit}")
        self.limit = limit
        self.steps = 0
        self.by_scheme: Dict[str, int] = {}

    def record_step(self, scheme: str, t: float):
        """Count one step, raising StepBudgetExceeded once the cap is used up."""
        if self.exhausted:
            logger.warning(f"Step budget of {self.limit} exhausted at t={t:g} ({scheme})")
            raise StepBudgetExceeded(
                f"Step budget of {self.limit} steps exhausted at t={t:g}",
                details={"limit": self.limit, "t": t, "scheme": scheme},
            )
        self.steps += 1
        self.by_scheme[scheme] = self.by_scheme.get(scheme, 0) + 1

    @property
    def exhausted(self) -> bool:
        return self.limit is not None and self.steps >= self.limit

    @property
    def remaining(self) -> Optional[int]:
        return None if self.limit is None else max(self.limit - self.steps, 0)

    def get_usage_report(self) -> Dict[str, Any]:
        return {
            "steps": self.steps,
            "limit": self.limit,
            "remaining": self.remaining,
            "by_scheme": dict(self.by_scheme),
        }
