"""Majorant sequence, closed-form estimates and norm bounds"""

from .composition import (
    CompositionQuery,
    FactorCheck,
    NormInterval,
    composition_bounds,
    conformal_map,
    disc_bounds,
    embedding_constant_bounds,
    mobius,
    restated_factor_check,
    transfer_alpha_r,
)
from .estimates import LemmaEstimate, estimate_applies, h1, h2, lemma4_estimate
from .majorant import SupremumResult, majorant_components, s_alpha, s_alpha_sup
from .theorem import (
    BoundReport,
    LowerMethod,
    UpperMethod,
    improved_lower_bound,
    sandwich_gaps,
    theorem_bounds,
)

__all__ = [
    "BoundReport",
    "CompositionQuery",
    "FactorCheck",
    "LemmaEstimate",
    "LowerMethod",
    "NormInterval",
    "SupremumResult",
    "UpperMethod",
    "composition_bounds",
    "conformal_map",
    "disc_bounds",
    "embedding_constant_bounds",
    "estimate_applies",
    "h1",
    "h2",
    "improved_lower_bound",
    "lemma4_estimate",
    "majorant_components",
    "mobius",
    "restated_factor_check",
    "s_alpha",
    "s_alpha_sup",
    "sandwich_gaps",
    "theorem_bounds",
    "transfer_alpha_r",
]
