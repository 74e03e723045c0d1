"""Scalar corollaries for composition operators"""

import math
from dataclasses import dataclass
from typing import Any, Dict, NamedTuple, Optional, Union

from src.config import get_settings
from src.kernel import AlphaParam
from src.bounds.theorem import theorem_bounds
from src.special import zeta
from src.utils.exceptions import DomainError
from src.validation import ParameterValidator

Number = Union[float, complex]


class NormInterval(NamedTuple):
    """Lower and upper bound for an operator norm"""
    lower: float
    upper: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"lower": self.lower, "upper": self.upper}


@dataclass(frozen=True)
class CompositionQuery:
    """Real part of w = phi(+inf) for a symbol on Dirichlet series"""
    re_w: float

    def __post_init__(self):
        re_w = ParameterValidator.validate_interval(
            "re_w", self.re_w, 0.5, math.inf, lo_open=True, hi_open=True
        )
        object.__setattr__(self, "re_w", re_w)

    @property
    def alpha(self) -> AlphaParam:
        """alpha = Re(w) - 1/2"""
        return AlphaParam(alpha=self.re_w - 0.5)


@dataclass(frozen=True)
class FactorCheck:
    """Outcome of comparing the transferred bound with the restated product bound"""
    alpha: float
    r: float
    alpha_r: float
    lhs: float
    rhs: float
    holds: bool
    zeta_ratio_condition: bool
    non_sharp_certified: bool

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "alpha": self.alpha,
            "r": self.r,
            "alpha_r": self.alpha_r,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "zeta_ratio_condition": self.zeta_ratio_condition,
            "non_sharp_certified": self.non_sharp_certified,
        }


def _radius(r: float) -> float:
    return ParameterValidator.validate_interval("r", r, 0.0, 1.0, hi_open=True)


def composition_bounds(
    query: Union[CompositionQuery, float], tol: Optional[float] = None
) -> NormInterval:
    """
    Norm bounds for a composition operator on Dirichlet series

    With alpha = Re(w) - 1/2, the point-evaluation functional gives
    sqrt(zeta(2 Re w)) from below and the form norm gives sqrt(upper(alpha))
    from above; the upper bound is sharp when alpha <= alpha_0.
    tol is the zeta budget (defaults to settings.zeta_tol).

    Raises:
        DomainError: If Re(w) <= 1/2
    """
    if not isinstance(query, CompositionQuery):
        query = CompositionQuery(re_w=query)
    lower = math.sqrt(zeta(2.0 * query.re_w, tol))
    upper = math.sqrt(theorem_bounds(query.alpha, tol).upper)
    return NormInterval(lower=lower, upper=upper)


def disc_bounds(r: float) -> NormInterval:
    """
    Sharp norm bounds on the Hardy space of the disc when |phi(0)| = r

    Raises:
        DomainError: If r is outside [0, 1)
    """
    r = _radius(r)
    return NormInterval(
        lower=math.sqrt(1.0 / (1.0 - r * r)),
        upper=math.sqrt((1.0 + r) / (1.0 - r)),
    )


def conformal_map(alpha: AlphaParam, z: Number) -> Number:
    """T_alpha(z) = alpha (1 - z)/(1 + z), mapping the disc onto Re > 0"""
    a = AlphaParam.coerce(alpha).alpha
    if z == -1:
        raise DomainError("conformal map has a pole at z = -1")
    return a * (1 - z) / (1 + z)


def mobius(r: float, z: Number) -> Number:
    """The involution phi_r(z) = (r - z)/(1 - r z) of the disc"""
    r = _radius(r)
    if r * z == 1:
        raise DomainError(f"mobius map has a pole at z = 1/{r}")
    return (r - z) / (1 - r * z)


def transfer_alpha_r(alpha: AlphaParam, r: float) -> AlphaParam:
    """
    Transference parameter alpha_r = alpha (1 - r)/(1 + r)

    Raises:
        DomainError: If r is outside [0, 1)
    """
    r = _radius(r)
    return AlphaParam(alpha=conformal_map(alpha, r))


def embedding_constant_bounds(alpha: AlphaParam) -> NormInterval:
    """Bounds for the optimal embedding constant, the square root of the form norm"""
    report = theorem_bounds(alpha)
    return NormInterval(lower=math.sqrt(report.lower), upper=math.sqrt(report.upper))


def restated_factor_check(
    alpha: AlphaParam, r: float, slack: Optional[float] = None
) -> FactorCheck:
    """
    Compare sqrt(upper(alpha_r)) with sqrt(upper(alpha)) * disc upper bound

    The restated product bound is certified non-sharp when r > 0 and
    upper(alpha_r) < lower(alpha) (1+r)/(1-r) by more than the slack, since
    the transferred bound sqrt(norm(B_{alpha_r})) is sharp.

    Args:
        alpha: Kernel parameter
        r: |phi(0)| in [0, 1)
        slack: Relative slack on the comparison (defaults to settings.verify_slack)

    Returns:
        FactorCheck with both sides and the zeta-ratio condition
    """
    param = AlphaParam.coerce(alpha)
    r = _radius(r)
    slack = slack if slack is not None else get_settings().verify_slack
    transferred = transfer_alpha_r(param, r)
    inner = theorem_bounds(transferred)
    outer = theorem_bounds(param)
    factor = (1.0 + r) / (1.0 - r)

    lhs = math.sqrt(inner.upper)
    rhs = math.sqrt(outer.upper) * disc_bounds(r).upper
    zeta_ratio = zeta(1.0 + transferred.alpha) / zeta(1.0 + 2.0 * param.alpha)
    return FactorCheck(
        alpha=param.alpha,
        r=r,
        alpha_r=transferred.alpha,
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs * (1.0 + slack),
        zeta_ratio_condition=zeta_ratio < factor,
        non_sharp_certified=r > 0 and inner.upper < outer.lower * factor * (1.0 - slack),
    )
