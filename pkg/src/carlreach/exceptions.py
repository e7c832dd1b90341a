"""Exception types shared across the package.

The CLI maps each subclass to a distinct exit code, so keep this hierarchy
flat and stable.
"""


class CarlreachError(Exception):
    """Base class for all errors raised by this package."""


class BudgetExceededError(CarlreachError):
    """A lifted dimension or Kronecker power exceeds the component budget."""


class AssumptionsViolatedError(CarlreachError):
    """Error-bound assumptions (dissipativity, weak nonlinearity) do not hold.

    Carries the individual failure reasons so callers can report which
    assumption broke.
    """

    def __init__(self, message: str, reasons: list[str] | None = None):
        super().__init__(message)
        self.reasons = reasons or []


class DivergenceError(CarlreachError):
    """A support-function bound became non-finite during propagation."""


class RestartRejectedError(CarlreachError):
    """An error-bound reevaluation would not improve the estimate."""


class ConfigError(CarlreachError):
    """A run configuration is missing fields or fails validation."""
