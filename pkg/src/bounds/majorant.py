"""The majorant sequence S_alpha(m) from the weighted Cauchy-Schwarz bound"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np

from src.config import get_settings
from src.kernel import AlphaParam
from src.special.zeta import scaled_tail_sum
from src.utils.logger import get_logger
from src.validation import ParameterValidator

logger = get_logger(__name__)

LIMIT = "limit"


@dataclass(frozen=True)
class SupremumResult:
    """Largest value of S_alpha over 1..m_max and the m -> infinity limit"""
    sup: float
    argmax: Union[int, str]
    m_max: int

    @property
    def at_limit(self) -> bool:
        return self.argmax == LIMIT

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"sup": self.sup, "argmax": self.argmax, "m_max": self.m_max}


class _CompensatedSum:
    """Neumaier running sum that can also be rescaled"""

    def __init__(self, start: float = 0.0):
        self.total = start
        self.compensation = 0.0

    def add(self, x: float) -> None:
        t = self.total + x
        if abs(self.total) >= abs(x):
            self.compensation += (self.total - t) + x
        else:
            self.compensation += (x - t) + self.total
        self.total = t

    def scale(self, factor: float) -> None:
        self.total *= factor
        self.compensation *= factor

    @property
    def value(self) -> float:
        return self.total + self.compensation


def _scaled_head(a: float, m: int) -> float:
    """m**(-alpha) sum_{n<=m} n**(alpha-1) as sum (n/m)**(alpha-1) / m"""
    return math.fsum((np.arange(1, m + 1, dtype=float) / m) ** (a - 1.0)) / m


def _scaled_tail(a: float, m: int, tol: float) -> float:
    """m**alpha sum_{n>m} n**(-alpha-1), error at most tol"""
    return scaled_tail_sum(-a - 1.0, m, m, tol).value


def s_alpha(alpha: AlphaParam, m: int, tol: Optional[float] = None) -> float:
    """
    S_alpha(m) = m**(-alpha) sum_{n<=m} n**(alpha-1) + m**alpha sum_{n>m} n**(-alpha-1)

    Both pieces are summed in the ratio n/m, so m**alpha is never formed.

    Args:
        alpha: Kernel parameter
        m: Row index, >= 1
        tol: Absolute error budget for the tail term (defaults to settings)

    Returns:
        S_alpha(m)

    Raises:
        AccuracyError: If the tail cannot be evaluated to tol
    """
    a = AlphaParam.coerce(alpha).alpha
    m = ParameterValidator.validate_integer("m", m, minimum=1)
    tol = ParameterValidator.validate_positive(
        "tol", tol if tol is not None else get_settings().scalar_tol
    )
    return _scaled_head(a, m) + _scaled_tail(a, m, tol)


def majorant_components(
    alpha: AlphaParam, m_max: int, tol: Optional[float] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Both Riemann-sum pieces of S_alpha(m) for m = 1..m_max

    With r_m = ((m-1)/m)**alpha the head obeys H(m) = r_m H(m-1) + 1/m for
    ascending m, and the tail T(m) = r_{m+1} (1/(m+1) + T(m+1)) runs down from
    T(m_max), so the tail adds its smallest terms first. Both recurrences use
    a compensated running sum and stay finite for any alpha.

    Returns:
        (head, tail), each of shape (m_max,), index i holding m = i + 1
    """
    a = AlphaParam.coerce(alpha).alpha
    m_max = ParameterValidator.validate_integer("m_max", m_max, minimum=1)
    tol = ParameterValidator.validate_positive(
        "tol", tol if tol is not None else get_settings().scalar_tol
    )
    ms = np.arange(1, m_max + 1, dtype=float)
    # shrink[i] = (m/(m+1))**alpha for m = i + 1
    shrink = np.exp(-a * np.log1p(1.0 / ms)).tolist()
    inverse = (1.0 / ms).tolist()

    head = np.empty(m_max)
    running = _CompensatedSum()
    for i in range(m_max):
        if i:
            running.scale(shrink[i - 1])
        running.add(inverse[i])
        head[i] = running.value

    tail = np.empty(m_max)
    running = _CompensatedSum(_scaled_tail(a, m_max, tol))
    tail[m_max - 1] = running.value
    for i in range(m_max - 2, -1, -1):
        running.add(inverse[i + 1])
        running.scale(shrink[i])
        tail[i] = running.value
    return head, tail


def s_alpha_sup(
    alpha: AlphaParam, m_max: Optional[int] = None, tol: Optional[float] = None
) -> SupremumResult:
    """
    Supremum of S_alpha(m) over m = 1..m_max together with the limit 2/alpha

    Args:
        alpha: Kernel parameter
        m_max: Last index scanned, >= 2 (defaults to settings.sup_m_max)
        tol: Tail budget per entry

    Returns:
        SupremumResult; argmax is "limit" when 2/alpha is not exceeded
    """
    a = AlphaParam.coerce(alpha).alpha
    m_max = ParameterValidator.validate_integer(
        "m_max", m_max if m_max is not None else get_settings().sup_m_max, minimum=2
    )
    head, tail = majorant_components(a, m_max, tol)
    values = head + tail
    index = int(np.argmax(values))
    best = float(values[index])
    limit = 2.0 / a
    logger.debug(f"s_alpha_sup(alpha={a}) scanned {m_max} rows, best m={index + 1}")
    if limit >= best:
        return SupremumResult(sup=limit, argmax=LIMIT, m_max=m_max)
    return SupremumResult(sup=best, argmax=index + 1, m_max=m_max)
