"""
wbwave Errors

Exception hierarchy shared by every plane. The CLI maps the three
families (config, numerical, output) to distinct exit codes.
"""
from typing import Any, Dict, Optional


class WBWaveError(Exception):
    """Base exception for all wbwave errors."""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class ConfigError(WBWaveError, ValueError):
    """Raised for malformed, unknown or invalid configuration values."""
    def __init__(self, message: str, line: Optional[int] = None, details: Dict[str, Any] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, details)
        self.line = line


class NumericalError(WBWaveError):
    """Base class for failures of the numerical schemes."""
    pass


class ResonanceError(NumericalError):
    """Raised when the frozen-coefficient two-point problem is singular."""
    pass


class PivotError(NumericalError):
    """Raised when the Thomas sweep meets a (near) zero pivot."""
    pass


class ConvergenceError(NumericalError):
    """Raised when a Newton iteration does not converge."""
    pass


class FrontLostError(NumericalError):
    """Raised when a tracked level set no longer crosses the profile."""
    pass


class RankDeficientError(NumericalError):
    """Raised when a least-squares basis is rank deficient."""
    pass


class StepBudgetExceeded(NumericalError):
    """Raised when a run exhausts its step budget."""
    pass


class OutputError(WBWaveError):
    """Raised when results cannot be written or read."""
    def __init__(self, message: str, path: str = "", details: Dict[str, Any] = None):
        super().__init__(f"{message} ({path})" if path else message, details)
        self.path = path
