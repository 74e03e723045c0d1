"""Lower and upper bounds for the norm of B_alpha"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from src.config import get_settings
from src.kernel import AlphaParam
from src.special import zeta, zeta_excess
from src.utils.exceptions import DivergenceError, InvariantViolationError
from src.utils.logger import get_logger
from src.validation import ParameterValidator

logger = get_logger(__name__)

BOUND_ORDER_SLACK = 1e-12
EXACT_GAP = 1e-9


class LowerMethod(str, Enum):
    """Provenance of the lower bound"""
    CONTINUOUS_LIMIT = "continuous_limit"
    POINT_EVALUATION = "point_evaluation"
    IMPROVED = "improved"
    RAYLEIGH = "rayleigh"


class UpperMethod(str, Enum):
    """Provenance of the upper bound"""
    CAUCHY_SCHWARZ_SUP = "cauchy_schwarz_sup"


@dataclass(frozen=True)
class BoundReport:
    """Bound pair for the norm of B_alpha with method provenance"""
    alpha: AlphaParam
    lower: float
    upper: float
    exact: bool
    lower_method: LowerMethod
    upper_method: UpperMethod = UpperMethod.CAUCHY_SCHWARZ_SUP

    def __post_init__(self):
        if self.lower > self.upper + BOUND_ORDER_SLACK:
            raise InvariantViolationError(
                f"lower {self.lower!r} exceeds upper {self.upper!r} at alpha={self.alpha.alpha}"
            )
        if self.exact and abs(self.upper - self.lower) > EXACT_GAP:
            raise InvariantViolationError(
                f"exact report with gap {self.upper - self.lower!r} at alpha={self.alpha.alpha}"
            )

    def tightened(self, value: float, method: LowerMethod) -> "BoundReport":
        """Return a report whose lower bound is raised to value when it improves it"""
        if value <= self.lower:
            return self
        return replace(self, lower=value, lower_method=method)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "alpha": self.alpha.alpha,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "lower_method": self.lower_method.value,
            "upper_method": self.upper_method.value,
        }


def improved_lower_bound(alpha: AlphaParam, tol: Optional[float] = None) -> float:
    """
    2 - zeta(2 alpha)/zeta(2 alpha - 1), from the test vector a_m = m**(1/2 - alpha)

    Raises:
        DivergenceError: If alpha <= 1
    """
    a = AlphaParam.coerce(alpha).alpha
    if a <= 1:
        raise DivergenceError(f"improved lower bound needs alpha > 1, got {a}")
    return 2.0 - zeta(2.0 * a, tol) / zeta(2.0 * a - 1.0, tol)


def theorem_bounds(alpha: AlphaParam, tol: Optional[float] = None) -> BoundReport:
    """
    Assemble the bound pair for the norm of B_alpha

    lower = max(2/alpha, zeta(1+2alpha), improved bound when alpha > 1)
    upper = max(2/alpha, zeta(1+alpha)); the pair is exact iff alpha <= alpha_0.

    Args:
        alpha: Kernel parameter
        tol: zeta tolerance (defaults to settings.zeta_tol)

    Returns:
        BoundReport
    """
    # deferred: the roots package builds on this module
    from src.roots import alpha_zero

    param = AlphaParam.coerce(alpha)
    a = param.alpha
    tol = tol if tol is not None else get_settings().zeta_tol
    two_over_alpha = 2.0 / a

    candidates = [
        (two_over_alpha, LowerMethod.CONTINUOUS_LIMIT),
        (zeta(1.0 + 2.0 * a, tol), LowerMethod.POINT_EVALUATION),
    ]
    if a > 1:
        candidates.append((improved_lower_bound(param, tol), LowerMethod.IMPROVED))
    lower, lower_method = candidates[0]
    for value, method in candidates[1:]:
        if value > lower:
            lower, lower_method = value, method

    upper = max(two_over_alpha, zeta(1.0 + a, tol))
    exact = a <= alpha_zero().value
    report = BoundReport(
        alpha=param, lower=lower, upper=upper, exact=exact, lower_method=lower_method
    )
    logger.debug(f"theorem_bounds: {report.to_dict()}")
    return report


def sandwich_gaps(alpha: AlphaParam, tol: Optional[float] = None) -> Tuple[float, float]:
    """
    (lower - 1) 4**alpha and (upper - 1) 2**alpha for alpha >= 2

    Built from zeta_excess(s) = (zeta(s) - 1) 2**(s-1), so neither the
    cancellation in zeta - 1 nor the overflow of 4**alpha occurs:

        point evaluation   zeta_excess(1 + 2 alpha)
        improved           (4 zeta_excess(2 alpha - 1) - 2 zeta_excess(2 alpha)) / zeta(2 alpha - 1)
        upper              zeta_excess(1 + alpha)

    2/alpha <= 1 here, so the continuous limit never sets either bound.

    Raises:
        DomainError: If alpha < 2
    """
    a = ParameterValidator.validate_interval(
        "alpha", AlphaParam.coerce(alpha).alpha, 2.0, math.inf, hi_open=True
    )
    tol = tol if tol is not None else get_settings().zeta_tol
    point_evaluation = zeta_excess(1.0 + 2.0 * a, tol)
    improved = math.fsum([
        4.0 * zeta_excess(2.0 * a - 1.0, tol), -2.0 * zeta_excess(2.0 * a, tol)
    ]) / zeta(2.0 * a - 1.0, tol)
    return max(point_evaluation, improved), zeta_excess(1.0 + a, tol)
