"""Custom exceptions for the library"""

from typing import Optional


class HilbertFormsError(Exception):
    """Base exception for all library errors"""
    pass


class DomainError(HilbertFormsError):
    """Raised when an argument lies outside the mathematical domain"""
    pass


class UnsupportedDegreeError(DomainError):
    """Raised for Bernoulli degrees outside the tabulated range"""
    pass


class DivergenceError(DomainError):
    """Raised when a requested series or closed form diverges"""
    pass


class PreconditionError(HilbertFormsError):
    """Raised when an operation's precondition is violated"""
    pass


class ResourceError(HilbertFormsError):
    """Raised when a request exceeds a memory or size cap"""
    pass


class BracketError(HilbertFormsError):
    """Raised when a root bracket shows no sign change or fails its pre-check"""
    pass


class InvariantViolationError(HilbertFormsError):
    """Raised when a computed result contradicts a proven relation"""
    pass


class AccuracyError(HilbertFormsError):
    """Raised when a requested tolerance cannot be met"""

    def __init__(self, message: str, best_estimate: Optional[float] = None):
        super().__init__(message)
        self.best_estimate = best_estimate


class ConvergenceError(HilbertFormsError):
    """Raised when an iteration exhausts its budget"""

    def __init__(
        self,
        message: str,
        best_estimate: Optional[float] = None,
        residual: Optional[float] = None,
        iterations: Optional[int] = None,
    ):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.residual = residual
        self.iterations = iterations
