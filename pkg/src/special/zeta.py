"""Riemann zeta function for real s > 1 and power-law tails"""

import math
from functools import lru_cache
from typing import Optional

import numpy as np

from src.config import get_settings
from src.special.bernoulli import EVEN_BERNOULLI_NUMBERS
from src.special.euler_maclaurin import (
    EMResult,
    PowerSumSpec,
    em_tail_ratio,
    em_tail_sum,
    falling_factorial,
)
from src.utils.exceptions import AccuracyError, DivergenceError, DomainError, PreconditionError
from src.utils.logger import get_logger
from src.validation import ParameterValidator

logger = get_logger(__name__)

TAIL_ORDER = 2


def _cutoff(p: float, tol: float, start: int, base: int = 1) -> int:
    """Smallest M >= max(start, base) whose order-2 tail remainder, times base**(-p-1), is <= tol"""
    scale = abs(
        EVEN_BERNOULLI_NUMBERS[2 * TAIL_ORDER + 2]
        / math.factorial(2 * TAIL_ORDER + 2)
        * falling_factorial(p, 2 * TAIL_ORDER + 1)
    )
    # scale * base**(-p-1) * M**(p - 5) <= tol, solved in logs
    log_cutoff = (
        math.log(scale) - math.log(tol) - (p + 1) * math.log(base)
    ) / (2 * TAIL_ORDER + 1 - p)
    # exp(700) is past any cap
    cutoff = math.ceil(math.exp(min(log_cutoff, 700.0)))
    return max(cutoff, start, base, 1)


def direct_sum(p: float, first: int, last: int) -> float:
    """Correctly rounded sum of n**p for first <= n <= last, ascending"""
    if last < first:
        return 0.0
    return math.fsum(np.arange(first, last + 1, dtype=float) ** p)


def _checked_cutoff(p: float, tol: float, start: int, base: int, cap: Optional[int]) -> int:
    cap = cap if cap is not None else get_settings().zeta_cutoff_cap
    cutoff = _cutoff(p, tol, start, base)
    if cutoff - start > cap:
        raise AccuracyError(
            f"tail of n**{p} needs {cutoff - start} direct terms > cap {cap} for tol={tol}",
            best_estimate=None,
        )
    return cutoff


def _validate_tail(p: float, start: int, tol: float):
    p = ParameterValidator.validate_real("p", p)
    if p >= -1:
        raise DivergenceError(f"sum of n**{p} diverges (need exponent < -1)")
    tol = ParameterValidator.validate_positive("tol", tol)
    start = ParameterValidator.validate_integer("start", start, minimum=0)
    return p, start, tol


def tail_sum(
    p: float,
    start: int,
    tol: float,
    cutoff_cap: Optional[int] = None,
) -> EMResult:
    """
    Sum n**p over n > start with absolute error at most tol

    Terms up to a cutoff M are summed directly, the rest by em_tail_sum.

    Args:
        p: Exponent, < -1
        start: Last excluded index (0 sums the whole series)
        tol: Absolute error budget
        cutoff_cap: Most terms summed directly before the tail (defaults to settings)

    Returns:
        EMResult for the tail

    Raises:
        DivergenceError: If p >= -1
        AccuracyError: If the cutoff needed for tol exceeds the cap
    """
    p, start, tol = _validate_tail(p, start, tol)
    cutoff = _checked_cutoff(p, tol, start, 1, cutoff_cap)
    head = direct_sum(p, start + 1, cutoff)
    tail = em_tail_sum(PowerSumSpec(exponent=p, start=cutoff, order=TAIL_ORDER))
    logger.debug(f"tail_sum(p={p}, start={start}) cutoff={cutoff}")
    return EMResult(
        value=math.fsum([head, tail.value]),
        remainder_bound=tail.remainder_bound,
        remainder_sign=tail.remainder_sign,
    )


def scaled_tail_sum(
    p: float,
    start: int,
    base: int,
    tol: float,
    cutoff_cap: Optional[int] = None,
) -> EMResult:
    """
    base**(-p-1) * sum_{n>start} n**p, never forming base**(-p-1)

    The direct terms are (n/base)**p / base and the Euler-Maclaurin part is
    em_tail_ratio weighted by (M/base)**(p+1) <= 1, so the result is finite
    whenever the scaled sum is, however large -p gets.

    Args:
        p: Exponent, < -1
        start: Last excluded index
        base: Scale, 1 <= base <= start + 1
        tol: Absolute error budget on the scaled sum
        cutoff_cap: Most terms summed directly before the tail (defaults to settings)

    Returns:
        EMResult for the scaled tail

    Raises:
        DivergenceError: If p >= -1
        PreconditionError: If base exceeds start + 1
        AccuracyError: If the cutoff needed for tol exceeds the cap
    """
    p, start, tol = _validate_tail(p, start, tol)
    base = ParameterValidator.validate_integer("base", base, minimum=1)
    if base > start + 1:
        raise PreconditionError(f"base {base} exceeds start + 1 = {start + 1}")
    cutoff = _checked_cutoff(p, tol, start, base, cutoff_cap)

    ratios = np.arange(start + 1, cutoff + 1, dtype=float) / base
    head = math.fsum(ratios ** p) / base if ratios.size else 0.0
    tail = em_tail_ratio(PowerSumSpec(exponent=p, start=cutoff, order=TAIL_ORDER))
    # (M/base)**(p+1) underflows to 0.0 instead of raising
    weight = (cutoff / base) ** (p + 1)
    logger.debug(f"scaled_tail_sum(p={p}, start={start}, base={base}) cutoff={cutoff}")
    return EMResult(
        value=math.fsum([head, weight * tail.value]),
        remainder_bound=weight * tail.remainder_bound,
        remainder_sign=tail.remainder_sign,
    )


@lru_cache(maxsize=8192)
def _zeta_cached(s: float, tol: float, cap: int) -> float:
    return tail_sum(-s, 0, tol / 2.0, cutoff_cap=cap).value


def _zeta_argument(s: float) -> float:
    s = ParameterValidator.validate_real("s", s)
    if s <= 1:
        raise DomainError(f"zeta(s) diverges for s <= 1, got s={s}")
    return s


def zeta(s: float, tol: Optional[float] = None) -> float:
    """
    Riemann zeta function for real s > 1

    Args:
        s: Real argument, > 1
        tol: Absolute error budget (defaults to settings.zeta_tol)

    Returns:
        zeta(s) within tol

    Raises:
        DomainError: If s <= 1
        AccuracyError: If tol cannot be met below the cutoff cap
    """
    s = _zeta_argument(s)
    settings = get_settings()
    tol = ParameterValidator.validate_positive("tol", tol if tol is not None else settings.zeta_tol)
    return _zeta_cached(s, tol, settings.zeta_cutoff_cap)


def zeta_excess(s: float, tol: Optional[float] = None) -> float:
    """
    (zeta(s) - 1) * 2**(s-1) = sum_{n>=2} (2/n)**s / 2

    Free of the cancellation in zeta(s) - 1 and of overflow in 2**(s-1);
    tends to 1/2 as s grows.

    Raises:
        DomainError: If s <= 1
        AccuracyError: If tol cannot be met below the cutoff cap
    """
    s = _zeta_argument(s)
    tol = ParameterValidator.validate_positive(
        "tol", tol if tol is not None else get_settings().zeta_tol
    )
    return scaled_tail_sum(-s, 1, 2, tol).value
