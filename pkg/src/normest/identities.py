"""Closed-form identities for alpha > 1"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from src.bounds.theorem import improved_lower_bound
from src.config import get_settings
from src.kernel import AlphaParam
from src.special import tail_sum, zeta
from src.utils.exceptions import DivergenceError
from src.validation import ParameterValidator


@dataclass(frozen=True)
class DoubleSumResult:
    """Truncated and closed-form value of sum_{m,n} max(m, n)**(-2 alpha)"""
    alpha: float
    n: int
    truncated: float
    closed_form: float
    tail_estimate: float

    @property
    def corrected(self) -> float:
        """Truncated value plus the Euler-Maclaurin estimate of the omitted part"""
        return self.truncated + self.tail_estimate

    @property
    def gap(self) -> float:
        return self.closed_form - self.truncated

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "alpha": self.alpha,
            "n": self.n,
            "truncated": self.truncated,
            "closed_form": self.closed_form,
            "tail_estimate": self.tail_estimate,
            "corrected": self.corrected,
        }


@dataclass(frozen=True)
class FailureCheck:
    """Whether the improved lower bound rules out the upper bound 2/alpha"""
    alpha: float
    improved_lower: float
    two_over_alpha: float
    violates: bool

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "alpha": self.alpha,
            "improved_lower": self.improved_lower,
            "two_over_alpha": self.two_over_alpha,
            "violates": self.violates,
        }


def _above_one(alpha: AlphaParam) -> float:
    a = AlphaParam.coerce(alpha).alpha
    if a <= 1:
        raise DivergenceError(f"zeta(2 alpha - 1) has a pole for alpha <= 1, got alpha={a}")
    return a


def maxmax_double_sum(alpha: AlphaParam, n: int, tol: Optional[float] = None) -> DoubleSumResult:
    """
    Compare sum_{m,n<=N} max(m, n)**(-2 alpha) with 2 zeta(2 alpha - 1) - zeta(2 alpha)

    The value max(m, n) = k occurs 2k - 1 times, so the truncated double sum
    is sum_{k<=N} (2k - 1) k**(-2 alpha).

    Args:
        alpha: Kernel parameter, > 1
        n: Truncation N
        tol: Budget for the tail estimate (defaults to settings.scalar_tol)

    Raises:
        DivergenceError: If alpha <= 1
    """
    a = _above_one(alpha)
    n = ParameterValidator.validate_integer("n", n, minimum=1)
    tol = tol if tol is not None else get_settings().scalar_tol

    k = np.arange(1, n + 1, dtype=float)
    truncated = math.fsum((2.0 * k - 1.0) * k ** (-2.0 * a))
    closed_form = 2.0 * zeta(2.0 * a - 1.0) - zeta(2.0 * a)
    tail_estimate = (
        2.0 * tail_sum(1.0 - 2.0 * a, n, tol / 3.0).value - tail_sum(-2.0 * a, n, tol / 3.0).value
    )
    return DoubleSumResult(
        alpha=a, n=n, truncated=truncated, closed_form=closed_form, tail_estimate=tail_estimate
    )


def failure_check(alpha: AlphaParam) -> FailureCheck:
    """
    Test whether 2 - zeta(2 alpha)/zeta(2 alpha - 1) exceeds 2/alpha

    Raises:
        DivergenceError: If alpha <= 1
    """
    a = _above_one(alpha)
    improved = improved_lower_bound(a)
    two_over_alpha = 2.0 / a
    return FailureCheck(
        alpha=a,
        improved_lower=improved,
        two_over_alpha=two_over_alpha,
        violates=improved > two_over_alpha,
    )
