"""Rayleigh quotients of the extremal test vectors"""

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from src.bounds.theorem import improved_lower_bound
from src.kernel import AlphaParam
from src.normest.section import kernel_section
from src.utils.exceptions import DivergenceError, PreconditionError
from src.utils.logger import get_logger
from src.validation import ParameterValidator

logger = get_logger(__name__)


class TestVectorKind(str, Enum):
    """Families of test vectors"""
    EPS_FAMILY = "eps_family"
    ALPHA_FAMILY = "alpha_family"

    __test__ = False


@dataclass(frozen=True)
class TestVectorSpec:
    """a_m = m**(-1/2 - eps) (eps_family) or a_m = m**(1/2 - alpha) (alpha_family)"""
    kind: TestVectorKind
    eps: Optional[float] = None

    __test__ = False

    def __post_init__(self):
        object.__setattr__(self, "kind", TestVectorKind(self.kind))
        if self.kind is TestVectorKind.EPS_FAMILY and self.eps is None:
            raise PreconditionError("eps_family needs eps")

    def check(self, alpha: float) -> None:
        """
        Raises:
            PreconditionError: If eps_family has eps outside (0, alpha)
        """
        if self.kind is TestVectorKind.EPS_FAMILY:
            ParameterValidator.validate_interval(
                "eps", self.eps, 0.0, alpha, lo_open=True, hi_open=True, error=PreconditionError
            )

    def coefficients(self, alpha: float, n: int) -> np.ndarray:
        """First n coordinates of the vector"""
        m = np.arange(1, n + 1, dtype=float)
        if self.kind is TestVectorKind.EPS_FAMILY:
            return m ** (-0.5 - self.eps)
        return m ** (0.5 - alpha)


def rayleigh_quotient(
    alpha: AlphaParam, spec: TestVectorSpec, n: Optional[int], tol: Optional[float] = None
) -> float:
    """
    B_alpha(a, a) / ||a||**2 for a test vector truncated to n coordinates

    With n=None the alpha_family quotient of the infinite vector is returned in
    closed form, 2 - zeta(2 alpha)/zeta(2 alpha - 1).

    Args:
        alpha: Kernel parameter
        spec: Test vector family
        n: Number of coordinates, or None for the infinite alpha_family vector
        tol: zeta budget for the closed form (defaults to settings.zeta_tol)

    Returns:
        The quotient, a lower bound for the top eigenvalue of the n-section

    Raises:
        PreconditionError: If spec does not fit alpha, or eps_family with n=None
        DivergenceError: alpha_family with n=None and alpha <= 1
    """
    param = AlphaParam.coerce(alpha)
    a = param.alpha
    spec.check(a)

    if n is None:
        if spec.kind is not TestVectorKind.ALPHA_FAMILY:
            raise PreconditionError("only alpha_family has an infinite-vector closed form")
        if a <= 1:
            raise DivergenceError(f"m**(1/2 - alpha) is not square summable for alpha={a}")
        return improved_lower_bound(param, tol)

    n = ParameterValidator.validate_integer("n", n, minimum=1)
    if spec.kind is TestVectorKind.ALPHA_FAMILY and a <= 1:
        message = f"alpha_family vector is not in l2 for alpha={a}; truncated quotient only"
        logger.warning(message)
        warnings.warn(message, RuntimeWarning)

    vector = spec.coefficients(a, n)
    numerator = kernel_section(param, n).quadratic_form(vector)
    denominator = math.fsum(vector * vector)
    return numerator / denominator
