"""Deterministic bracketing root refinement"""

import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

from src.config import get_settings
from src.utils.exceptions import BracketError, ConvergenceError, PreconditionError
from src.utils.logger import get_logger
from src.validation import ParameterValidator

logger = get_logger(__name__)


@dataclass(frozen=True)
class RootResult:
    """Accepted root together with its final bracket"""
    value: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    iterations: int

    @property
    def width(self) -> float:
        return self.bracket_hi - self.bracket_lo

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "value": self.value,
            "bracket_lo": self.bracket_lo,
            "bracket_hi": self.bracket_hi,
            "residual": self.residual,
            "iterations": self.iterations,
        }


def _sign(value: float) -> int:
    return (value > 0) - (value < 0)


def refine_root(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
) -> RootResult:
    """
    Shrink a sign-change bracket of f until its width is at most tol

    Iterations alternate a secant step, taken only when it lands strictly
    inside the bracket, with a bisection step, so the width at least halves
    every two iterations. The sequence of iterates does not depend on tol.

    Args:
        f: Continuous function on [a, b]
        a: Left end
        b: Right end, > a
        tol: Final bracket width (defaults to settings.scalar_tol)
        max_iter: Iteration limit (defaults to settings.root_max_iter)

    Returns:
        RootResult whose value is the bracket end with the smaller |f|

    Raises:
        BracketError: If f(a) and f(b) have the same strict sign
        ConvergenceError: If the width is still above tol after max_iter steps
    """
    settings = get_settings()
    tol = ParameterValidator.validate_positive(
        "tol", tol if tol is not None else settings.scalar_tol
    )
    max_iter = ParameterValidator.validate_integer(
        "max_iter", max_iter if max_iter is not None else settings.root_max_iter
    )
    lo = ParameterValidator.validate_real("a", a)
    hi = ParameterValidator.validate_real("b", b)
    if not lo < hi:
        raise PreconditionError(f"need a < b, got [{lo}, {hi}]")

    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0:
        return RootResult(value=lo, bracket_lo=lo, bracket_hi=lo, residual=0.0, iterations=0)
    if f_hi == 0:
        return RootResult(value=hi, bracket_lo=hi, bracket_hi=hi, residual=0.0, iterations=0)
    if _sign(f_lo) == _sign(f_hi):
        raise BracketError(
            f"no sign change on [{lo}, {hi}]: f(a)={f_lo!r}, f(b)={f_hi!r}"
        )

    iterations = 0
    while hi - lo > tol:
        if iterations >= max_iter:
            best = lo if abs(f_lo) <= abs(f_hi) else hi
            raise ConvergenceError(
                f"bracket [{lo}, {hi}] still wider than {tol} after {max_iter} iterations",
                best_estimate=best,
                residual=min(abs(f_lo), abs(f_hi)),
                iterations=iterations,
            )
        x = 0.5 * (lo + hi)
        if iterations % 2 == 0 and f_hi != f_lo:
            secant = hi - f_hi * (hi - lo) / (f_hi - f_lo)
            if lo < secant < hi and math.isfinite(secant):
                x = secant
        iterations += 1

        fx = f(x)
        if fx == 0:
            lo = hi = x
            f_lo = f_hi = fx
            break
        if _sign(fx) == _sign(f_lo):
            lo, f_lo = x, fx
        else:
            hi, f_hi = x, fx

    value, residual = (lo, abs(f_lo)) if abs(f_lo) <= abs(f_hi) else (hi, abs(f_hi))
    logger.debug(f"refine_root: {value!r} in [{lo!r}, {hi!r}] after {iterations} iterations")
    return RootResult(
        value=value, bracket_lo=lo, bracket_hi=hi, residual=residual, iterations=iterations
    )
