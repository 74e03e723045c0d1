"""Defining equations of alpha_0, alpha_1, alpha_2 and the crossing points"""

import math
import threading
from functools import partial
from typing import Callable, NamedTuple, Optional

import numpy as np

from src.bounds.estimates import h1, h2
from src.config import get_settings
from src.roots.solver import RootResult, refine_root
from src.special import zeta
from src.utils.exceptions import BracketError, InvariantViolationError
from src.utils.logger import get_logger
from src.validation import ParameterValidator

logger = get_logger(__name__)

DEFAULT_BRACKET = (1.0, 2.0)
MONOTONE_STEP = 0.01
ZETA_TOL_FACTOR = 0.01


class HRoots(NamedTuple):
    alpha1: RootResult
    alpha2: RootResult


class Crossings(NamedTuple):
    zeta_vs_2a: RootResult
    zeta2_vs_2a: RootResult
    improved_vs_2a: RootResult


def alpha0_equation(alpha: float, zeta_tol: Optional[float] = None) -> float:
    """alpha zeta(1 + alpha) - 2"""
    return alpha * zeta(1.0 + alpha, zeta_tol) - 2.0


def zeta_minus_two_over_alpha(alpha: float, zeta_tol: Optional[float] = None) -> float:
    """zeta(1 + alpha) - 2/alpha"""
    return zeta(1.0 + alpha, zeta_tol) - 2.0 / alpha


def zeta2_minus_two_over_alpha(alpha: float, zeta_tol: Optional[float] = None) -> float:
    """zeta(1 + 2 alpha) - 2/alpha"""
    return zeta(1.0 + 2.0 * alpha, zeta_tol) - 2.0 / alpha


def improved_minus_two_over_alpha(alpha: float, zeta_tol: Optional[float] = None) -> float:
    """(2 - zeta(2 alpha)/zeta(2 alpha - 1)) - 2/alpha, for alpha > 1"""
    return 2.0 - zeta(2.0 * alpha, zeta_tol) / zeta(2.0 * alpha - 1.0, zeta_tol) - 2.0 / alpha


def check_monotone(
    f: Callable[[float], float], a: float, b: float, step: float = MONOTONE_STEP, name: str = "f"
) -> None:
    """
    Require f to be strictly monotone on the grid a, a+step, ..., b

    Raises:
        BracketError: With the first offending grid pair
    """
    grid = np.linspace(a, b, math.ceil((b - a) / step) + 1)
    values = np.array([f(float(x)) for x in grid])
    steps = np.diff(values)
    increasing = steps[0] > 0
    bad = np.nonzero(steps <= 0)[0] if increasing else np.nonzero(steps >= 0)[0]
    if bad.size:
        i = int(bad[0])
        raise BracketError(
            f"{name} is not monotone on [{a}, {b}]: "
            f"f({grid[i]!r})={values[i]!r}, f({grid[i + 1]!r})={values[i + 1]!r}"
        )


def _solve(
    f: Callable[[float], float],
    name: str,
    tol: float,
    bracket=DEFAULT_BRACKET,
) -> RootResult:
    a, b = bracket
    check_monotone(f, a, b, name=name)
    result = refine_root(f, a, b, tol=tol)
    logger.info(f"{name}: root {result.value!r} (width {result.width:.3e})")
    return result


def _resolve_tol(tol: Optional[float]) -> float:
    return ParameterValidator.validate_positive(
        "tol", tol if tol is not None else get_settings().scalar_tol
    )


def solve_alpha0(tol: Optional[float] = None) -> RootResult:
    """
    Root of alpha zeta(1 + alpha) = 2 on [1, 2]

    Args:
        tol: Bracket width; zeta is evaluated to tol/100

    Returns:
        RootResult for alpha_0
    """
    tol = _resolve_tol(tol)
    f = partial(alpha0_equation, zeta_tol=tol * ZETA_TOL_FACTOR)
    return _solve(f, "alpha0", tol)


def solve_h_roots(tol: Optional[float] = None) -> HRoots:
    """
    Roots alpha_1 of h1 and alpha_2 of h2 on [1, 2]

    Raises:
        InvariantViolationError: If alpha_1 <= alpha_2
    """
    tol = _resolve_tol(tol)
    alpha1 = _solve(h1, "h1", tol)
    alpha2 = _solve(h2, "h2", tol)
    if not alpha1.value > alpha2.value:
        raise InvariantViolationError(
            f"expected alpha1 > alpha2, got {alpha1.value!r} <= {alpha2.value!r}"
        )
    return HRoots(alpha1=alpha1, alpha2=alpha2)


def solve_crossings(tol: Optional[float] = None) -> Crossings:
    """
    Crossings of 2/alpha with zeta(1+alpha), zeta(1+2alpha) and the improved bound

    The improved bound tends to 2/alpha as alpha -> 1+ and stays below it up
    to alpha_0, so its crossing is bracketed on [alpha_0, 2].
    """
    tol = _resolve_tol(tol)
    zeta_tol = tol * ZETA_TOL_FACTOR
    first = _solve(partial(zeta_minus_two_over_alpha, zeta_tol=zeta_tol), "zeta_vs_2a", tol)
    second = _solve(partial(zeta2_minus_two_over_alpha, zeta_tol=zeta_tol), "zeta2_vs_2a", tol)
    third = _solve(
        partial(improved_minus_two_over_alpha, zeta_tol=zeta_tol),
        "improved_vs_2a",
        tol,
        bracket=(first.value, DEFAULT_BRACKET[1]),
    )
    return Crossings(zeta_vs_2a=first, zeta2_vs_2a=second, improved_vs_2a=third)


_alpha_zero: Optional[RootResult] = None
_alpha_zero_lock = threading.Lock()


def alpha_zero() -> RootResult:
    """Process-wide alpha_0 at the default tolerance, computed once"""
    global _alpha_zero
    if _alpha_zero is None:
        with _alpha_zero_lock:
            if _alpha_zero is None:
                _alpha_zero = solve_alpha0()
    return _alpha_zero
