"""Parameter types shared by the kernel family"""

from dataclasses import dataclass
from typing import Any, Dict, Union

from src.config import get_settings
from src.validation import ParameterValidator


@dataclass(frozen=True)
class AlphaParam:
    """Kernel parameter alpha, strictly positive and finite"""
    alpha: float

    def __post_init__(self):
        object.__setattr__(
            self, "alpha", ParameterValidator.validate_positive("alpha", self.alpha)
        )

    @classmethod
    def coerce(cls, value: Union["AlphaParam", float]) -> "AlphaParam":
        """Accept either an AlphaParam or a bare real"""
        if isinstance(value, cls):
            return value
        return cls(alpha=value)

    def __float__(self) -> float:
        return self.alpha

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"alpha": self.alpha}


@dataclass(frozen=True)
class QuadratureBudget:
    """Absolute tolerance and refinement depth for adaptive quadrature"""
    tol: float
    max_refinements: int = 50

    def __post_init__(self):
        object.__setattr__(self, "tol", ParameterValidator.validate_positive("tol", self.tol))
        object.__setattr__(
            self,
            "max_refinements",
            ParameterValidator.validate_integer("max_refinements", self.max_refinements),
        )

    @classmethod
    def from_settings(cls) -> "QuadratureBudget":
        settings = get_settings()
        return cls(tol=settings.quadrature_tol, max_refinements=settings.quadrature_max_refinements)

    def split(self) -> "QuadratureBudget":
        """Half the tolerance, same depth"""
        return QuadratureBudget(tol=self.tol / 2.0, max_refinements=self.max_refinements)
