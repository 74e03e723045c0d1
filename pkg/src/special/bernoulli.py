"""Bernoulli polynomials B_0..B_5 and the even Bernoulli numbers"""

import math

import numpy as np

from src.utils.exceptions import UnsupportedDegreeError
from src.validation import ParameterValidator

MAX_DEGREE = 5

# Descending powers, the order np.polyval expects
_POLYNOMIAL_COEFFS = {
    0: (1.0,),
    1: (1.0, -0.5),
    2: (1.0, -1.0, 1.0 / 6.0),
    3: (1.0, -1.5, 0.5, 0.0),
    4: (1.0, -2.0, 1.0, 0.0, -1.0 / 30.0),
    5: (1.0, -2.5, 5.0 / 3.0, 0.0, -1.0 / 6.0, 0.0),
}

# B_6 is only used for the first omitted Euler-Maclaurin term at order 2
EVEN_BERNOULLI_NUMBERS = {2: 1.0 / 6.0, 4: -1.0 / 30.0, 6: 1.0 / 42.0}

_PUBLIC_NUMBERS = (2, 4)


def _check_degree(k: int) -> int:
    if isinstance(k, bool) or int(k) != k or not 0 <= int(k) <= MAX_DEGREE:
        raise UnsupportedDegreeError(
            f"Bernoulli polynomial of degree {k!r} not supported (0..{MAX_DEGREE})"
        )
    return int(k)


def bernoulli_poly(k: int, x: float) -> float:
    """
    Evaluate the Bernoulli polynomial B_k at x

    Args:
        k: Degree, 0 <= k <= 5
        x: Point in [0, 1]

    Returns:
        B_k(x)

    Raises:
        UnsupportedDegreeError: If k is outside 0..5
        DomainError: If x is outside [0, 1]
    """
    k = _check_degree(k)
    x = ParameterValidator.validate_interval("x", x, 0.0, 1.0)
    return float(np.polyval(_POLYNOMIAL_COEFFS[k], x))


def bernoulli_values(k: int, x: np.ndarray) -> np.ndarray:
    """Vectorised B_k over an array of points (no range check on x)"""
    k = _check_degree(k)
    return np.polyval(_POLYNOMIAL_COEFFS[k], np.asarray(x, dtype=float))


def bernoulli_number(k: int) -> float:
    """
    Return the Bernoulli number B_k = B_k(0) for k in {2, 4}

    Raises:
        UnsupportedDegreeError: For any other k
    """
    if isinstance(k, bool) or k not in _PUBLIC_NUMBERS:
        raise UnsupportedDegreeError(f"Bernoulli number B_{k} not supported (2 or 4)")
    return EVEN_BERNOULLI_NUMBERS[int(k)]


def odd_bernoulli_sup(degree: int) -> float:
    """
    sup |B_degree(x)| over [0, 1] for degree in {1, 3, 5}

    The extremum sits where B_{degree-1} vanishes, i.e. where x(1-x) equals
    1/6 (degree 3) or 1/sqrt(30) (degree 5).
    """
    if degree == 1:
        return 0.5
    if degree == 3:
        product = 1.0 / 6.0
    elif degree == 5:
        product = 1.0 / math.sqrt(30.0)
    else:
        raise UnsupportedDegreeError(f"No tabulated supremum for B_{degree}")
    x = (1.0 - math.sqrt(1.0 - 4.0 * product)) / 2.0
    return abs(bernoulli_poly(degree, x))
