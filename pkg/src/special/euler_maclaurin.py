"""Euler-Maclaurin summation of power laws with remainder sign certificates"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict

import numpy as np

from src.special.bernoulli import EVEN_BERNOULLI_NUMBERS, bernoulli_values, odd_bernoulli_sup
from src.utils.exceptions import DivergenceError, PreconditionError
from src.utils.logger import get_logger
from src.validation import ParameterValidator

logger = get_logger(__name__)

MAX_ORDER = 2
SIMPSON_PANELS = 1024
SIGN_FLOOR = 1e-13


class RemainderSign(str, Enum):
    """Sign of the Euler-Maclaurin remainder term"""
    NEGATIVE = "negative"
    POSITIVE = "positive"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class PowerSumSpec:
    """Monomial summand f(x) = x**exponent summed from start with correction order"""
    exponent: float
    start: int
    order: int = 2

    def __post_init__(self):
        object.__setattr__(
            self, "exponent", ParameterValidator.validate_real("exponent", self.exponent)
        )
        object.__setattr__(
            self, "start", ParameterValidator.validate_integer("start", self.start, minimum=1)
        )
        order = ParameterValidator.validate_integer("order", self.order, minimum=0)
        if order > MAX_ORDER:
            raise PreconditionError(f"order must be in 0..{MAX_ORDER}, got {order}")
        object.__setattr__(self, "order", order)


@dataclass(frozen=True)
class EMResult:
    """Euler-Maclaurin value with remainder budget and sign certificate"""
    value: float
    remainder_bound: float
    remainder_sign: RemainderSign

    def __post_init__(self):
        if not self.remainder_bound >= 0:
            raise PreconditionError(f"remainder_bound must be >= 0, got {self.remainder_bound}")

    @property
    def is_upper_bound(self) -> bool:
        """A negative remainder means value overestimates the true sum"""
        return self.remainder_sign is RemainderSign.NEGATIVE

    @property
    def is_lower_bound(self) -> bool:
        return self.remainder_sign is RemainderSign.POSITIVE

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "value": self.value,
            "remainder_bound": self.remainder_bound,
            "remainder_sign": self.remainder_sign.value,
        }


def falling_factorial(p: float, r: int) -> float:
    """Falling factorial p (p-1) ... (p-r+1), the r-th derivative factor of x**p"""
    result = 1.0
    for i in range(r):
        result *= p - i
    return result


def _derivative(p: float, r: int, x: float) -> float:
    return falling_factorial(p, r) * x ** (p - r)


def _lemma_sign(k: int) -> int:
    """(-1)**(k-1): sign of the integral of g * B_{2k+1} over [0,1] for g > 0 decreasing"""
    return 1 if (k - 1) % 2 == 0 else -1


def _remainder_sign(coefficient: float, power: float, k: int) -> RemainderSign:
    """
    Sign of (1/(2k+1)!) * integral of c * x**q * B_{2k+1}({x})

    For q < 0 the magnitude of x**q decreases on every unit interval; for q > 0
    it increases and the reflection x -> 1-x flips the sign.
    """
    if coefficient == 0 or power == 0:
        return RemainderSign.UNKNOWN
    sign = _lemma_sign(k) * (1 if coefficient > 0 else -1) * (1 if power < 0 else -1)
    return RemainderSign.POSITIVE if sign > 0 else RemainderSign.NEGATIVE


def _correction(k: int, p: float, x: float) -> float:
    """sum_{j<=k} B_{2j}/(2j)! f^(2j-1)(x)"""
    return math.fsum(
        EVEN_BERNOULLI_NUMBERS[2 * j] / math.factorial(2 * j) * _derivative(p, 2 * j - 1, x)
        for j in range(1, k + 1)
    )


def em_tail_sum(spec: PowerSumSpec) -> EMResult:
    """
    Sum n**p over n > m by the Euler-Maclaurin formula

    Args:
        spec: Power sum with exponent p < -1, start m >= 1, order k

    Returns:
        EMResult whose remainder bound is the first omitted correction term

    Raises:
        DivergenceError: If p >= -1
    """
    p, m, k = spec.exponent, spec.start, spec.order
    if p >= -1:
        raise DivergenceError(f"sum of n**{p} diverges (need exponent < -1)")

    integral = m ** (p + 1) / -(p + 1)
    value = math.fsum([integral, -(m ** p) / 2.0, -_correction(k, p, m)])

    coefficient = falling_factorial(p, 2 * k + 1)
    power = p - 2 * k - 1
    omitted = (
        EVEN_BERNOULLI_NUMBERS[2 * k + 2] / math.factorial(2 * k + 2) * coefficient * m ** power
    )
    result = EMResult(
        value=value,
        remainder_bound=abs(omitted),
        remainder_sign=_remainder_sign(coefficient, power, k),
    )
    logger.debug(f"em_tail_sum(p={p}, m={m}, k={k}) -> {result}")
    return result


def em_tail_ratio(spec: PowerSumSpec) -> EMResult:
    """
    em_tail_sum divided by m**(p+1)

    Every term is O(1), so the result stays finite where m**(p+1) over- or
    underflows. The remainder bound is scaled the same way.

    Raises:
        DivergenceError: If p >= -1
    """
    p, m, k = spec.exponent, spec.start, spec.order
    if p >= -1:
        raise DivergenceError(f"sum of n**{p} diverges (need exponent < -1)")

    corrections = math.fsum(
        EVEN_BERNOULLI_NUMBERS[2 * j] / math.factorial(2 * j)
        * falling_factorial(p, 2 * j - 1) * float(m) ** (-2 * j)
        for j in range(1, k + 1)
    )
    value = math.fsum([1.0 / -(p + 1), -0.5 / m, -corrections])

    coefficient = falling_factorial(p, 2 * k + 1)
    omitted = (
        EVEN_BERNOULLI_NUMBERS[2 * k + 2] / math.factorial(2 * k + 2)
        * coefficient * float(m) ** (-2 * k - 2)
    )
    return EMResult(
        value=value,
        remainder_bound=abs(omitted),
        remainder_sign=_remainder_sign(coefficient, p - 2 * k - 1, k),
    )


def em_partial_sum(spec: PowerSumSpec, m_end: int) -> EMResult:
    """
    Sum n**p for start <= n <= m_end by the Euler-Maclaurin formula

    The remainder bound is the first omitted term when |f^(2k+1)| is completely
    monotone (its power is below -1); otherwise the crude bound
    sup|B_{2k+1}|/(2k+1)! times the integral of |f^(2k+1)|.

    Args:
        spec: Power sum (exponent, start, order)
        m_end: Last summation index, >= spec.start

    Returns:
        EMResult; remainder_bound is 0 when the remainder vanishes identically
    """
    p, a, k = spec.exponent, spec.start, spec.order
    b = ParameterValidator.validate_integer("m_end", m_end, minimum=a)

    if p == -1:
        integral = math.log(b / a)
    else:
        integral = (b ** (p + 1) - a ** (p + 1)) / (p + 1)
    value = math.fsum([
        integral,
        (a ** p + b ** p) / 2.0,
        _correction(k, p, b),
        -_correction(k, p, a),
    ])

    coefficient = falling_factorial(p, 2 * k + 1)
    power = p - 2 * k - 1
    if coefficient == 0 or power == 0 or a == b:
        return EMResult(value=value, remainder_bound=0.0, remainder_sign=RemainderSign.UNKNOWN)

    if power < -1:
        bound = abs(
            EVEN_BERNOULLI_NUMBERS[2 * k + 2] / math.factorial(2 * k + 2)
            * coefficient * a ** power
        )
    else:
        if power == -1:
            derivative_mass = math.log(b / a)
        else:
            derivative_mass = (b ** (power + 1) - a ** (power + 1)) / (power + 1)
        bound = (
            odd_bernoulli_sup(2 * k + 1) / math.factorial(2 * k + 1)
            * abs(coefficient) * derivative_mass
        )
    return EMResult(
        value=value,
        remainder_bound=bound,
        remainder_sign=_remainder_sign(coefficient, power, k),
    )


def remainder_sign_check(g_exponent: float, k: int, x0: float) -> RemainderSign:
    """
    Sign of the integral over [0,1] of (x0 + x)**g_exponent * B_{2k+1}(x)

    Computed by composite Simpson quadrature; magnitudes below 1e-13 are
    reported as unknown.

    Args:
        g_exponent: Negative exponent, so g is positive and decreasing
        k: 1 or 2
        x0: Shift, >= 1

    Returns:
        RemainderSign of the integral

    Raises:
        PreconditionError: If g_exponent >= 0, k not in {1, 2} or x0 < 1
    """
    if k not in (1, 2):
        raise PreconditionError(f"k must be 1 or 2, got {k}")
    g_exponent = ParameterValidator.validate_real("g_exponent", g_exponent)
    if g_exponent >= 0:
        raise PreconditionError(f"g must be decreasing (g_exponent < 0), got {g_exponent}")
    x0 = ParameterValidator.validate_interval(
        "x0", x0, 1.0, math.inf, hi_open=True, error=PreconditionError
    )

    nodes = np.linspace(0.0, 1.0, 2 * SIMPSON_PANELS + 1)
    weights = np.full(nodes.size, 2.0)
    weights[1::2] = 4.0
    weights[0] = weights[-1] = 1.0
    weights *= (1.0 / SIMPSON_PANELS) / 6.0

    integrand = (x0 + nodes) ** g_exponent * bernoulli_values(2 * k + 1, nodes)
    integral = math.fsum(weights * integrand)
    logger.debug(f"remainder_sign_check({g_exponent}, k={k}, x0={x0}) integral={integral!r}")

    if abs(integral) < SIGN_FLOOR:
        return RemainderSign.UNKNOWN
    return RemainderSign.POSITIVE if integral > 0 else RemainderSign.NEGATIVE
