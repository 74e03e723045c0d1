"""Kernel K_alpha, the integral I_alpha and the continuous form norm"""

from .continuous import (
    ExtremalDecomposition,
    continuous_extremal_ratio,
    continuous_norm_quadrature,
    extremal_decomposition,
    extremal_ratio_by_quadrature,
)
from .kernel import i_alpha, kernel_eval, kernel_values
from .quadrature import adaptive_simpson, power_integral
from .types import AlphaParam, QuadratureBudget

__all__ = [
    "AlphaParam",
    "QuadratureBudget",
    "ExtremalDecomposition",
    "adaptive_simpson",
    "power_integral",
    "continuous_extremal_ratio",
    "continuous_norm_quadrature",
    "extremal_decomposition",
    "extremal_ratio_by_quadrature",
    "i_alpha",
    "kernel_eval",
    "kernel_values",
]
