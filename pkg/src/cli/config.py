"""Validated per-run configuration built from parsed arguments"""

import argparse
from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from src.normest import TestVectorKind


class Subcommand(str, Enum):
    BOUNDS = "bounds"
    SCAN = "scan"
    SUP = "sup"
    EIG = "eig"
    RAYLEIGH = "rayleigh"
    ROOTS = "roots"
    VERIFY = "verify"
    SANDWICH = "sandwich"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class Suite(str, Enum):
    LEMMA4 = "lemma4"
    SIGNS = "signs"
    MONOTONE_H = "monotone_h"
    IDENTITY = "identity"
    SUP_FORMULA = "sup_formula"
    TRANSFERENCE = "transference"
    ALL = "all"


# (alpha_min, alpha_max, steps) when the grid flags are omitted
GRID_DEFAULTS = {
    Subcommand.SCAN: (1.0, 2.0, 101),
    Subcommand.SANDWICH: (2.0, 8.0, 13),
}

NEEDS_ALPHA = {Subcommand.BOUNDS, Subcommand.SUP, Subcommand.EIG, Subcommand.RAYLEIGH}


class RunConfig(BaseModel):
    """One command-line invocation"""

    subcommand: Subcommand
    alpha: Optional[float] = Field(default=None, gt=0)
    alpha_min: Optional[float] = Field(default=None, gt=0)
    alpha_max: Optional[float] = Field(default=None, gt=0)
    steps: Optional[int] = Field(default=None, ge=2)
    m_max: Optional[int] = Field(default=None, ge=2)
    n: Optional[int] = Field(default=None, ge=1)
    eps: Optional[float] = Field(default=None, gt=0)
    family: TestVectorKind = TestVectorKind.EPS_FAMILY
    section: Optional[int] = Field(default=None, ge=1)
    suite: Suite = Suite.ALL
    tol: Optional[float] = Field(default=None, gt=0)
    format: OutputFormat = OutputFormat.CSV
    output: Optional[Path] = None

    @model_validator(mode="after")
    def check_subcommand(self) -> "RunConfig":
        if self.subcommand in NEEDS_ALPHA and self.alpha is None:
            raise ValueError(f"{self.subcommand.value} needs --alpha")
        if self.subcommand is Subcommand.EIG and self.n is None:
            raise ValueError("eig needs --n")
        if self.subcommand is Subcommand.VERIFY and self.tol is not None:
            raise ValueError("verify runs fixed budgets and takes no --tol")
        if self.subcommand is Subcommand.RAYLEIGH:
            if self.family is TestVectorKind.EPS_FAMILY:
                if self.eps is None or self.n is None:
                    raise ValueError("eps_family needs --eps and --n")
                if self.eps >= self.alpha:
                    raise ValueError(f"--eps must be below alpha={self.alpha}")

        if self.subcommand in GRID_DEFAULTS:
            lo, hi, steps = GRID_DEFAULTS[self.subcommand]
            if self.alpha_min is None:
                self.alpha_min = lo
            if self.alpha_max is None:
                self.alpha_max = hi
            if self.steps is None:
                self.steps = steps
            if not self.alpha_min < self.alpha_max:
                raise ValueError("--alpha-min must be below --alpha-max")
        if self.subcommand is Subcommand.SANDWICH and self.alpha_min < 2:
            raise ValueError("the sandwich scan is stated for alpha >= 2")
        return self

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        """Keep only the flags the model knows about"""
        values = {
            key: value
            for key, value in vars(args).items()
            if key in cls.model_fields and value is not None
        }
        return cls(**values)
