"""Utility modules"""

from .logger import setup_logger, get_logger
from .exceptions import (
    HilbertFormsError,
    DomainError,
    UnsupportedDegreeError,
    DivergenceError,
    PreconditionError,
    ResourceError,
    BracketError,
    InvariantViolationError,
    AccuracyError,
    ConvergenceError,
)

__all__ = [
    "setup_logger",
    "get_logger",
    "HilbertFormsError",
    "DomainError",
    "UnsupportedDegreeError",
    "DivergenceError",
    "PreconditionError",
    "ResourceError",
    "BracketError",
    "InvariantViolationError",
    "AccuracyError",
    "ConvergenceError",
]
