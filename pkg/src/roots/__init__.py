"""Root refinement for the defining equations"""

from .equations import (
    Crossings,
    HRoots,
    alpha0_equation,
    alpha_zero,
    check_monotone,
    improved_minus_two_over_alpha,
    solve_alpha0,
    solve_crossings,
    solve_h_roots,
    zeta2_minus_two_over_alpha,
    zeta_minus_two_over_alpha,
)
from .solver import RootResult, refine_root

__all__ = [
    "Crossings",
    "HRoots",
    "RootResult",
    "alpha0_equation",
    "alpha_zero",
    "check_monotone",
    "improved_minus_two_over_alpha",
    "refine_root",
    "solve_alpha0",
    "solve_crossings",
    "solve_h_roots",
    "zeta2_minus_two_over_alpha",
    "zeta_minus_two_over_alpha",
]
