"""Reachable-set enclosures for quadratic ODEs via Carleman linearization."""

from .exceptions import (
    AssumptionsViolatedError,
    BudgetExceededError,
    CarlreachError,
    ConfigError,
    DivergenceError,
    RestartRejectedError,
)
from .sets import Direction, Hyperrectangle, ball_inf, bloat, project, set_norm, support
from .tensor import box_kron_pow, canonical_monomial, kron, kron_pow

__version__ = "0.1.0"

__all__ = [
    "AssumptionsViolatedError",
    "BudgetExceededError",
    "CarlreachError",
    "ConfigError",
    "DivergenceError",
    "RestartRejectedError",
    "Direction",
    "Hyperrectangle",
    "ball_inf",
    "bloat",
    "project",
    "set_norm",
    "support",
    "box_kron_pow",
    "canonical_monomial",
    "kron",
    "kron_pow",
    "__version__",
]
