"""JSON documents emitted by the command line"""

from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field


class CompositionDocument(BaseModel):
    re_w: float
    lower: float
    upper: float


class BoundReportDocument(BaseModel):
    alpha: float
    lower: float
    upper: float
    exact: bool
    lower_method: Literal["continuous_limit", "point_evaluation", "improved", "rayleigh"]
    upper_method: Literal["cauchy_schwarz_sup"]
    composition: CompositionDocument


class ScanRowDocument(BaseModel):
    alpha: float
    two_over_alpha: float
    zeta_1p_alpha: float
    zeta_1p_2alpha: float
    improved_lower: Optional[float] = Field(default=None, description="null for alpha <= 1")
    lower: float
    upper: float


class ScanDocument(BaseModel):
    rows: List[ScanRowDocument]


class SandwichRowDocument(BaseModel):
    alpha: float
    scaled_lower_gap: float = Field(description="(lower - 1) * 4**alpha")
    scaled_upper_gap: float = Field(description="(upper - 1) * 2**alpha")


class SandwichDocument(BaseModel):
    rows: List[SandwichRowDocument]


class SupremumDocument(BaseModel):
    alpha: float
    sup: float
    argmax: Union[int, Literal["limit"]]
    m_max: int
    formula: float = Field(description="max(2/alpha, zeta(1+alpha))")


class EigenDocument(BaseModel):
    alpha: float
    n: int
    value: float
    iterations: int
    residual: float
    upper: float = Field(description="theorem upper bound for comparison")


class RayleighDocument(BaseModel):
    alpha: float
    kind: Literal["eps_family", "alpha_family"]
    eps: Optional[float] = None
    n: Optional[int] = Field(default=None, description="null for the closed form")
    value: float


class RootResultDocument(BaseModel):
    value: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    iterations: int


class RootsDocument(BaseModel):
    alpha0: RootResultDocument
    alpha1: RootResultDocument
    alpha2: RootResultDocument
    zeta_vs_2a: RootResultDocument
    zeta2_vs_2a: RootResultDocument
    improved_vs_2a: RootResultDocument


class VerifyFailureDocument(BaseModel):
    inputs: Dict[str, Any]
    relation: str
    observed: Dict[str, Any]


class VerifyOutcomeDocument(BaseModel):
    suite: str
    cases: int
    failures: List[VerifyFailureDocument]
    deviations: List[VerifyFailureDocument] = Field(
        default_factory=list, description="known violations of published relations, not failures"
    )


class VerifyReportDocument(BaseModel):
    outcomes: List[VerifyOutcomeDocument]
    passed: bool


class SeedInfoDocument(BaseModel):
    version: str
    alpha0: float
    alpha1: float
    alpha2: float
