"""Bernoulli polynomials, Euler-Maclaurin summation and the zeta function"""

from .bernoulli import bernoulli_number, bernoulli_poly, bernoulli_values, odd_bernoulli_sup
from .euler_maclaurin import (
    EMResult,
    PowerSumSpec,
    RemainderSign,
    em_partial_sum,
    em_tail_ratio,
    em_tail_sum,
    remainder_sign_check,
)
from .zeta import scaled_tail_sum, tail_sum, zeta, zeta_excess

__all__ = [
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_values",
    "odd_bernoulli_sup",
    "EMResult",
    "PowerSumSpec",
    "RemainderSign",
    "em_partial_sum",
    "em_tail_ratio",
    "em_tail_sum",
    "remainder_sign_check",
    "scaled_tail_sum",
    "tail_sum",
    "zeta",
    "zeta_excess",
]
