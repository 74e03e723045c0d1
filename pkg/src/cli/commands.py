"""Subcommand implementations"""

import math
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from src.bounds import (
    LowerMethod,
    composition_bounds,
    improved_lower_bound,
    s_alpha_sup,
    sandwich_gaps,
    theorem_bounds,
)
from src.cli.config import RunConfig, Subcommand
from src.cli.formatter import CommandOutput
from src.cli.schemas import (
    BoundReportDocument,
    CompositionDocument,
    EigenDocument,
    RayleighDocument,
    RootResultDocument,
    RootsDocument,
    SandwichDocument,
    SandwichRowDocument,
    ScanDocument,
    ScanRowDocument,
    SupremumDocument,
    VerifyOutcomeDocument,
    VerifyReportDocument,
)
from src.cli.verify import run_suites
from src.config import get_settings
from src.normest import TestVectorSpec, kernel_section, rayleigh_quotient, top_eigen
from src.roots import solve_alpha0, solve_crossings, solve_h_roots
from src.special import zeta
from src.utils.logger import get_logger

logger = get_logger(__name__)

SCAN_COLUMNS = [
    "alpha",
    "two_over_alpha",
    "zeta_1p_alpha",
    "zeta_1p_2alpha",
    "improved_lower",
    "lower",
    "upper",
]
SANDWICH_COLUMNS = ["alpha", "scaled_lower_gap", "scaled_upper_gap"]


def _grid(config: RunConfig) -> List[float]:
    return [float(a) for a in np.linspace(config.alpha_min, config.alpha_max, config.steps)]


def _map_grid(func: Callable[[float], Dict[str, Any]], grid: List[float]) -> List[Dict[str, Any]]:
    """Evaluate grid points concurrently; rows come back in grid order"""
    with ThreadPoolExecutor(max_workers=get_settings().threads) as executor:
        return list(executor.map(func, grid))


def run_bounds(config: RunConfig) -> CommandOutput:
    """Theorem bounds for one alpha plus the composition bounds at Re w = alpha + 1/2"""
    report = theorem_bounds(config.alpha, config.tol)
    if config.section is not None:
        section = kernel_section(report.alpha, config.section)
        eigen = top_eigen(section, tol=config.tol)
        report = report.tightened(eigen.value, LowerMethod.RAYLEIGH)
    composition = composition_bounds(config.alpha + 0.5, config.tol)

    document = BoundReportDocument(
        **report.to_dict(),
        composition=CompositionDocument(re_w=config.alpha + 0.5, **composition.to_dict()),
    )
    row = {
        **report.to_dict(),
        "composition_lower": composition.lower,
        "composition_upper": composition.upper,
    }
    return CommandOutput(columns=list(row), rows=[row], document=document)


def _scan_row(alpha: float, tol: Optional[float] = None) -> Dict[str, Any]:
    report = theorem_bounds(alpha, tol)
    return {
        "alpha": alpha,
        "two_over_alpha": 2.0 / alpha,
        "zeta_1p_alpha": zeta(1.0 + alpha, tol),
        "zeta_1p_2alpha": zeta(1.0 + 2.0 * alpha, tol),
        "improved_lower": improved_lower_bound(alpha, tol) if alpha > 1 else math.nan,
        "lower": report.lower,
        "upper": report.upper,
    }


def _scan_document_row(row: Dict[str, Any]) -> ScanRowDocument:
    improved = row["improved_lower"]
    return ScanRowDocument(**{**row, "improved_lower": None if math.isnan(improved) else improved})


def run_scan(config: RunConfig) -> CommandOutput:
    """One row of curves per grid point"""
    rows = _map_grid(partial(_scan_row, tol=config.tol), _grid(config))
    document = ScanDocument(rows=[_scan_document_row(row) for row in rows])
    return CommandOutput(columns=SCAN_COLUMNS, rows=rows, document=document)


def _sandwich_row(alpha: float, tol: Optional[float] = None) -> Dict[str, Any]:
    lower_gap, upper_gap = sandwich_gaps(alpha, tol)
    return {"alpha": alpha, "scaled_lower_gap": lower_gap, "scaled_upper_gap": upper_gap}


def run_sandwich(config: RunConfig) -> CommandOutput:
    """Normalised gaps (lower-1) 4**alpha and (upper-1) 2**alpha for alpha >= 2"""
    rows = _map_grid(partial(_sandwich_row, tol=config.tol), _grid(config))
    document = SandwichDocument(rows=[SandwichRowDocument(**row) for row in rows])
    return CommandOutput(columns=SANDWICH_COLUMNS, rows=rows, document=document)


def run_sup(config: RunConfig) -> CommandOutput:
    result = s_alpha_sup(config.alpha, config.m_max, config.tol)
    row = {
        "alpha": config.alpha,
        **result.to_dict(),
        "formula": max(2.0 / config.alpha, zeta(1.0 + config.alpha)),
    }
    return CommandOutput(columns=list(row), rows=[row], document=SupremumDocument(**row))


def run_eig(config: RunConfig) -> CommandOutput:
    section = kernel_section(config.alpha, config.n)
    result = top_eigen(section, tol=config.tol)
    row = {
        "alpha": config.alpha,
        "n": config.n,
        **result.to_dict(),
        "upper": theorem_bounds(config.alpha).upper,
    }
    return CommandOutput(columns=list(row), rows=[row], document=EigenDocument(**row))


def run_rayleigh(config: RunConfig) -> CommandOutput:
    spec = TestVectorSpec(kind=config.family, eps=config.eps)
    value = rayleigh_quotient(config.alpha, spec, config.n, config.tol)
    row = {
        "alpha": config.alpha,
        "kind": spec.kind.value,
        "eps": config.eps,
        "n": config.n,
        "value": value,
    }
    return CommandOutput(columns=list(row), rows=[row], document=RayleighDocument(**row))


def run_roots(config: RunConfig) -> CommandOutput:
    """alpha_0, alpha_1, alpha_2 and the three crossings"""
    results = {"alpha0": solve_alpha0(config.tol)}
    results.update(solve_h_roots(config.tol)._asdict())
    results.update(solve_crossings(config.tol)._asdict())
    rows = [{"name": name, **result.to_dict()} for name, result in results.items()]
    document = RootsDocument(
        **{name: RootResultDocument(**result.to_dict()) for name, result in results.items()}
    )
    return CommandOutput(columns=list(rows[0]), rows=rows, document=document)


def run_verify(config: RunConfig) -> CommandOutput:
    """Run a suite; exit status 1 when any relation fails"""
    outcomes = run_suites(config.suite.value)
    passed = all(outcome.passed for outcome in outcomes)
    for outcome in outcomes:
        for failure in outcome.failures:
            logger.warning(f"{outcome.suite}: {failure.relation} failed at {failure.inputs}")
    rows = [
        {
            "suite": outcome.suite,
            "cases": outcome.cases,
            "failures": len(outcome.failures),
            "deviations": len(outcome.deviations),
        }
        for outcome in outcomes
    ]
    document = VerifyReportDocument(
        outcomes=[VerifyOutcomeDocument(**outcome.to_dict()) for outcome in outcomes],
        passed=passed,
    )
    return CommandOutput(
        columns=["suite", "cases", "failures", "deviations"],
        rows=rows,
        document=document,
        exit_code=0 if passed else 1,
    )


COMMANDS: Dict[Subcommand, Callable[[RunConfig], CommandOutput]] = {
    Subcommand.BOUNDS: run_bounds,
    Subcommand.SCAN: run_scan,
    Subcommand.SUP: run_sup,
    Subcommand.EIG: run_eig,
    Subcommand.RAYLEIGH: run_rayleigh,
    Subcommand.ROOTS: run_roots,
    Subcommand.VERIFY: run_verify,
    Subcommand.SANDWICH: run_sandwich,
}
