"""The continuous form H_alpha on (0, inf): norm 2/alpha and its extremal family"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from src.kernel.quadrature import power_integral
from src.kernel.types import AlphaParam, QuadratureBudget
from src.utils.exceptions import AccuracyError, PreconditionError
from src.utils.logger import get_logger
from src.validation import ParameterValidator

logger = get_logger(__name__)


@dataclass(frozen=True)
class ExtremalDecomposition:
    """H_alpha(f, f) = leading + constant for f(t) = t**(-1/2 - eps) on t > 1"""
    alpha: float
    eps: float
    norm_squared: float
    leading: float
    constant: float

    @property
    def form_value(self) -> float:
        return self.leading + self.constant

    @property
    def ratio(self) -> float:
        return self.form_value / self.norm_squared

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "alpha": self.alpha,
            "eps": self.eps,
            "norm_squared": self.norm_squared,
            "leading": self.leading,
            "constant": self.constant,
            "ratio": self.ratio,
        }


def _check_eps(alpha: float, eps: float) -> float:
    return ParameterValidator.validate_interval(
        "eps", eps, 0.0, alpha, lo_open=True, hi_open=True, error=PreconditionError
    )


def continuous_norm_quadrature(
    alpha: AlphaParam, budget: Optional[QuadratureBudget] = None
) -> float:
    """
    Numerically evaluate C_alpha = int_0^1 y**(alpha-1) dy + int_1^inf y**(-alpha-1) dy

    The second integral is mapped onto (0, 1) by y -> 1/y. Each piece gets
    half of the tolerance.

    Args:
        alpha: Kernel parameter
        budget: Quadrature tolerance and depth (defaults to settings)

    Returns:
        C_alpha, which equals 2/alpha

    Raises:
        AccuracyError: If the budget is exhausted, carrying the best estimate
    """
    a = AlphaParam.coerce(alpha).alpha
    budget = budget or QuadratureBudget.from_settings()
    half = budget.split()

    near = power_integral(a - 1.0, half)
    # y = 1/u: y**(-alpha-1) dy -> u**(alpha+1) * u**(-2) du
    far = power_integral(a + 1.0 - 2.0, half)
    value = near + far
    logger.debug(f"continuous_norm_quadrature(alpha={a}) = {value!r}")
    return value


def extremal_decomposition(alpha: AlphaParam, eps: float) -> ExtremalDecomposition:
    """
    Closed-form split of H_alpha(f, f) for the truncated extremal family

    With f(t) = t**(-1/2 - eps) on t > 1, ||f||**2 = 1/(2 eps) and
    H_alpha(f, f) = (1/(alpha-eps) + 1/(alpha+eps)) ||f||**2 - 1/(alpha**2 - eps**2).

    Raises:
        PreconditionError: If eps is outside (0, alpha)
    """
    a = AlphaParam.coerce(alpha).alpha
    eps = _check_eps(a, eps)
    norm_squared = 1.0 / (2.0 * eps)
    leading = (1.0 / (a - eps) + 1.0 / (a + eps)) * norm_squared
    constant = -1.0 / ((a - eps) * (a + eps))
    return ExtremalDecomposition(
        alpha=a, eps=eps, norm_squared=norm_squared, leading=leading, constant=constant
    )


def continuous_extremal_ratio(alpha: AlphaParam, eps: float) -> float:
    """
    H_alpha(f, f) / ||f||**2 for f(t) = t**(-1/2 - eps) on t > 1

    The ratio simplifies to 2/(alpha + eps), increasing to 2/alpha as eps -> 0.

    Args:
        alpha: Kernel parameter
        eps: Decay offset in (0, alpha)

    Returns:
        The extremal ratio

    Raises:
        PreconditionError: If eps is outside (0, alpha)
    """
    a = AlphaParam.coerce(alpha).alpha
    eps = _check_eps(a, eps)
    return 2.0 / (a + eps)


def extremal_ratio_by_quadrature(
    alpha: AlphaParam, eps: float, budget: Optional[QuadratureBudget] = None
) -> float:
    """
    Quadrature cross-check of continuous_extremal_ratio

    After u = 1/t the inner integral is explicit and
    H_alpha(f, f) = 2/(alpha-eps) * int_0^1 (u**(2eps-1) - u**(alpha+eps-1)) du,
    ||f||**2 = int_0^1 u**(2eps-1) du; both are integrated numerically.

    Raises:
        PreconditionError: If eps is outside (0, alpha)
        AccuracyError: If the quadrature budget is exhausted
    """
    a = AlphaParam.coerce(alpha).alpha
    eps = _check_eps(a, eps)
    budget = budget or QuadratureBudget.from_settings()
    half = budget.split()

    norm_squared = power_integral(2.0 * eps - 1.0, half)
    mixed = power_integral(a + eps - 1.0, half)
    if norm_squared <= 0:
        raise AccuracyError("non-positive norm estimate", best_estimate=None)
    return 2.0 / (a - eps) * (norm_squared - mixed) / norm_squared
