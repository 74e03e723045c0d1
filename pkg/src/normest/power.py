"""Power iteration for the top eigenvalue of a kernel section"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from src.config import get_settings
from src.normest.section import KernelSection
from src.utils.exceptions import ConvergenceError
from src.utils.logger import get_logger
from src.validation import ParameterValidator

logger = get_logger(__name__)


@dataclass(frozen=True)
class EigenResult:
    """Top eigenvalue estimate of a section"""
    value: float
    iterations: int
    residual: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"value": self.value, "iterations": self.iterations, "residual": self.residual}


def start_vector(n: int) -> np.ndarray:
    """Unit vector proportional to m**(-1/2), positive in every coordinate"""
    v = np.arange(1, n + 1, dtype=float) ** -0.5
    return v / np.linalg.norm(v)


def top_eigen(
    section: KernelSection,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
) -> EigenResult:
    """
    Dominant eigenvalue of a positive symmetric section by power iteration

    The estimate is the Rayleigh quotient of a unit vector, hence a lower
    bound for the top eigenvalue and for the form norm. Iteration stops when
    both the change of the quotient and the residual ||Kv - lambda v|| drop
    below tol.

    Args:
        section: Dense or matrix-free section
        tol: Convergence threshold (defaults to settings.spectral_tol)
        max_iter: Iteration limit (defaults to settings.eigen_max_iter)

    Returns:
        EigenResult

    Raises:
        ConvergenceError: If max_iter is reached, carrying the best estimate
    """
    settings = get_settings()
    tol = ParameterValidator.validate_positive(
        "tol", tol if tol is not None else settings.spectral_tol
    )
    max_iter = ParameterValidator.validate_integer(
        "max_iter", max_iter if max_iter is not None else settings.eigen_max_iter
    )

    v = start_vector(section.n)
    previous = math.nan
    value = math.nan
    residual = math.inf
    for iteration in range(1, max_iter + 1):
        w = section.matvec(v)
        value = float(v @ w)
        residual = float(np.linalg.norm(w - value * v))
        if abs(value - previous) < tol and residual < tol:
            logger.debug(
                f"top_eigen(n={section.n}) converged in {iteration} iterations: {value!r}"
            )
            return EigenResult(value=value, iterations=iteration, residual=residual)
        previous = value
        v = w / np.linalg.norm(w)

    raise ConvergenceError(
        f"power iteration on n={section.n} did not converge in {max_iter} iterations",
        best_estimate=value,
        residual=residual,
        iterations=max_iter,
    )
