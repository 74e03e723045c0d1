"""Adaptive Simpson quadrature on (0, 1] with a regularising power substitution"""

import math
from typing import Callable, Optional, Tuple

from src.kernel.types import QuadratureBudget
from src.utils.exceptions import AccuracyError, DomainError
from src.utils.logger import get_logger
from src.validation import ParameterValidator

logger = get_logger(__name__)


def _panel(
    f: Callable[[float], float],
    a: float,
    b: float,
    fa: float,
    fm: float,
    fb: float,
    whole: float,
    tol: float,
    depth: int,
    max_depth: int,
) -> Tuple[float, bool]:
    """Refine one Simpson panel; returns (estimate, converged)"""
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole

    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0, True
    if depth >= max_depth:
        return left + right + delta / 15.0, False

    left_value, left_ok = _panel(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1, max_depth)
    right_value, right_ok = _panel(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1, max_depth)
    return left_value + right_value, left_ok and right_ok


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    budget: Optional[QuadratureBudget] = None,
) -> float:
    """
    Integrate f over [a, b] by recursive Simpson bisection

    Each half receives half of the remaining tolerance; a panel is accepted
    when the two-half estimate moves by at most 15 * tol, and the accepted
    value carries the Richardson correction.

    Args:
        f: Integrand, finite on the closed interval
        a: Lower limit
        b: Upper limit, > a
        budget: Tolerance and maximum bisection depth

    Returns:
        Integral estimate

    Raises:
        AccuracyError: If some panel still fails the test at the maximum depth
    """
    budget = budget or QuadratureBudget.from_settings()
    if not b > a:
        raise DomainError(f"need a < b, got [{a}, {b}]")
    fa, fb = f(a), f(b)
    fm = f(0.5 * (a + b))
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    value, converged = _panel(
        f, a, b, fa, fm, fb, whole, budget.tol, 0, budget.max_refinements
    )
    if not converged:
        raise AccuracyError(
            f"adaptive Simpson on [{a}, {b}] did not reach tol={budget.tol} "
            f"within {budget.max_refinements} refinements",
            best_estimate=value,
        )
    return value


def power_integral(exponent: float, budget: Optional[QuadratureBudget] = None) -> float:
    """
    Integral of u**exponent over (0, 1) for exponent > -1

    The substitution u = t**p with p = max(1, ceil(2/(exponent+1))) turns the
    integrand into p * t**(p(exponent+1) - 1), whose power is at least 1, so
    the endpoint singularity disappears.

    Raises:
        DomainError: If exponent <= -1 (the integral diverges)
        AccuracyError: If the quadrature budget is exhausted
    """
    exponent = ParameterValidator.validate_real("exponent", exponent)
    if exponent <= -1:
        raise DomainError(f"integral of u**{exponent} over (0, 1) diverges")
    p = max(1, math.ceil(2.0 / (exponent + 1.0)))
    power = p * (exponent + 1.0) - 1.0

    def integrand(t: float) -> float:
        return p * t ** power

    value = adaptive_simpson(integrand, 0.0, 1.0, budget)
    logger.debug(f"power_integral({exponent}) substitution p={p} -> {value!r}")
    return value
