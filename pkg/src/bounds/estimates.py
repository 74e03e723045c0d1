"""Closed-form Euler-Maclaurin estimates and the auxiliary functions h1, h2"""

from enum import Enum

from src.kernel import AlphaParam
from src.utils.exceptions import PreconditionError
from src.validation import ParameterValidator


class LemmaEstimate(str, Enum):
    """
    Closed-form estimates for the pieces of S_alpha(m) and zeta

    PARTIAL_UPPER_12 is the published form, which drops the B_4 term and sits
    below the direct sum for 1 < alpha < 2, m >= 2. PARTIAL_UPPER_12_FULL keeps
    that term and is the order-2 Euler-Maclaurin value, an upper bound.
    """
    TAIL_UPPER = "tail_upper"
    ZETA_LOWER = "zeta_lower"
    PARTIAL_UPPER_12 = "partial_upper_12"
    PARTIAL_UPPER_23 = "partial_upper_23"
    PARTIAL_UPPER_12_FULL = "partial_upper_12_full"


# closed alpha ranges where each estimate is valid; None means unrestricted
ESTIMATE_RANGES = {
    LemmaEstimate.TAIL_UPPER: None,
    LemmaEstimate.ZETA_LOWER: None,
    LemmaEstimate.PARTIAL_UPPER_12: (1.0, 2.0),
    LemmaEstimate.PARTIAL_UPPER_23: (2.0, 3.0),
    LemmaEstimate.PARTIAL_UPPER_12_FULL: (1.0, 2.0),
}


def estimate_applies(which: LemmaEstimate, alpha: float) -> bool:
    """Whether an estimate is stated for this alpha"""
    bounds = ESTIMATE_RANGES[LemmaEstimate(which)]
    return bounds is None or bounds[0] <= alpha <= bounds[1]


def lemma4_estimate(which: LemmaEstimate, alpha: AlphaParam, m: int = 1) -> float:
    """
    Evaluate one of the closed-form estimates

    tail_upper bounds m**alpha sum_{n>m} n**(-alpha-1); the partial
    forms bound m**(-alpha) sum_{n<=m} n**(alpha-1); zeta_lower bounds
    zeta(1+alpha) from below and ignores m.

    Args:
        which: Estimate to evaluate
        alpha: Kernel parameter
        m: Row index, >= 1

    Returns:
        Value of the closed form

    Raises:
        PreconditionError: If alpha is outside the estimate's range
    """
    which = LemmaEstimate(which)
    a = AlphaParam.coerce(alpha).alpha
    if not estimate_applies(which, a):
        lo, hi = ESTIMATE_RANGES[which]
        raise PreconditionError(f"{which.value} requires {lo} <= alpha <= {hi}, got {a}")

    if which is LemmaEstimate.ZETA_LOWER:
        return 1.0 / a + 0.5 + (a + 1.0) / 12.0 - (a + 1.0) * (a + 2.0) * (a + 3.0) / 720.0

    m = ParameterValidator.validate_integer("m", m, minimum=1)
    if which is LemmaEstimate.TAIL_UPPER:
        return 1.0 / a - 1.0 / (2.0 * m) + (a + 1.0) / (12.0 * m * m)

    base = 1.0 / a + 1.0 / (2.0 * m) + (a - 1.0) / (12.0 * m * m)
    if which is LemmaEstimate.PARTIAL_UPPER_23:
        return base
    printed = base - (a - 3.0) * (a - 4.0) / (12.0 * a) * m ** (-a)
    if which is LemmaEstimate.PARTIAL_UPPER_12:
        return printed
    return printed - (a - 1.0) * (a - 2.0) * (a - 3.0) / 720.0 * (m ** -4.0 - m ** (-a))


def _unit_interval_alpha(alpha: float) -> float:
    return ParameterValidator.validate_interval("alpha", alpha, 1.0, 2.0)


def h1(alpha: float) -> float:
    """
    h1(alpha) = (alpha-3)(alpha-4)/(12 alpha) * 2**(-alpha) - alpha/24

    Raises:
        DomainError: If alpha is outside [1, 2]
    """
    a = _unit_interval_alpha(alpha)
    return (a - 3.0) * (a - 4.0) / (12.0 * a) * 2.0 ** (-a) - a / 24.0


def h2(alpha: float) -> float:
    """
    h2(alpha) = 1/2 + (alpha+1)/12 - (alpha+1)(alpha+2)(alpha+3)/720 - 1/alpha + h1(alpha)

    Raises:
        DomainError: If alpha is outside [1, 2]
    """
    a = _unit_interval_alpha(alpha)
    return (
        0.5
        + (a + 1.0) / 12.0
        - (a + 1.0) * (a + 2.0) * (a + 3.0) / 720.0
        - 1.0 / a
        + h1(a)
    )
