"""The homogeneous kernel K_alpha and the Poisson-type integral I_alpha"""

import numpy as np

from src.kernel.types import AlphaParam
from src.utils.exceptions import DomainError
from src.validation import ParameterValidator


def kernel_eval(alpha: AlphaParam, x: float, y: float) -> float:
    """
    Evaluate K_alpha(x, y) = (xy)**(alpha - 1/2) / max(x, y)**(2 alpha)

    Computed as (min/max)**(alpha - 1/2) / max, which is symmetric in x and y
    bit for bit and avoids overflow for large arguments.

    Args:
        alpha: Kernel parameter
        x: Positive real
        y: Positive real

    Returns:
        K_alpha(x, y) > 0

    Raises:
        DomainError: If x or y is not a positive finite real
    """
    a = AlphaParam.coerce(alpha).alpha
    x = ParameterValidator.validate_positive("x", x)
    y = ParameterValidator.validate_positive("y", y)
    lo, hi = (x, y) if x <= y else (y, x)
    return (lo / hi) ** (a - 0.5) / hi


def kernel_values(alpha: AlphaParam, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """
    Vectorised K_alpha over the outer grid rows x cols

    Args:
        alpha: Kernel parameter
        rows: Positive points, shape (n,)
        cols: Positive points, shape (k,)

    Returns:
        Array of shape (n, k) with entry [i, j] = K_alpha(rows[i], cols[j])
    """
    a = AlphaParam.coerce(alpha).alpha
    rows = np.asarray(rows, dtype=float)
    cols = np.asarray(cols, dtype=float)
    if np.any(rows <= 0) or np.any(cols <= 0):
        raise DomainError("kernel points must be positive")
    lo = np.minimum.outer(rows, cols)
    hi = np.maximum.outer(rows, cols)
    return (lo / hi) ** (a - 0.5) / hi


def i_alpha(alpha: AlphaParam, x: float) -> float:
    """
    Closed form 1/max(x, 1/x)**alpha of the Poisson-type integral

    (alpha/pi) * integral over the real line of x**(it) / (alpha**2 + t**2) dt.

    Raises:
        DomainError: If x <= 0
    """
    a = AlphaParam.coerce(alpha).alpha
    x = ParameterValidator.validate_positive("x", x)
    return 1.0 / max(x, 1.0 / x) ** a
