"""Command-line entry point"""

import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from src import __version__
from src.cli.commands import COMMANDS
from src.cli.config import OutputFormat, RunConfig, Subcommand, Suite
from src.cli.formatter import ResultFormatter
from src.cli.schemas import SeedInfoDocument
from src.config import get_settings
from src.normest import TestVectorKind
from src.utils.exceptions import HilbertFormsError
from src.utils.logger import get_logger, setup_logger

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

logger = get_logger(__name__)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tol", type=float, help="tolerance override")
    parser.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value
    )
    parser.add_argument("--output", help="write to this file instead of stdout")


def _add_grid(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha-min", dest="alpha_min", type=float)
    parser.add_argument("--alpha-max", dest="alpha_max", type=float)
    parser.add_argument("--steps", type=int, help="number of grid points, >= 2")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one sub-parser per subcommand"""
    parser = argparse.ArgumentParser(
        prog="hilbert-forms",
        description="Bounds, scans and checks for the norm of Hilbert-type bilinear forms",
    )
    parser.add_argument(
        "--seed-info",
        action="store_true",
        help="print alpha_0, alpha_1, alpha_2 and the version as JSON",
    )
    parser.add_argument(
        "--log-level", dest="log_level", choices=["DEBUG", "INFO", "WARNING", "ERROR"]
    )
    sub = parser.add_subparsers(dest="subcommand")

    bounds = sub.add_parser(Subcommand.BOUNDS.value, help="theorem bounds for one alpha")
    bounds.add_argument("--alpha", type=float, required=True)
    bounds.add_argument(
        "--section", type=int, help="raise the lower bound with the top eigenvalue of this section"
    )
    _add_common(bounds)

    scan = sub.add_parser(Subcommand.SCAN.value, help="curves over an alpha grid")
    _add_grid(scan)
    _add_common(scan)

    sup = sub.add_parser(Subcommand.SUP.value, help="supremum of the majorant sequence")
    sup.add_argument("--alpha", type=float, required=True)
    sup.add_argument("--m-max", dest="m_max", type=int)
    _add_common(sup)

    eig = sub.add_parser(Subcommand.EIG.value, help="top eigenvalue of a finite section")
    eig.add_argument("--alpha", type=float, required=True)
    eig.add_argument("--n", type=int, required=True)
    _add_common(eig)

    rayleigh = sub.add_parser(Subcommand.RAYLEIGH.value, help="test-vector Rayleigh quotient")
    rayleigh.add_argument("--alpha", type=float, required=True)
    rayleigh.add_argument(
        "--family",
        choices=[k.value for k in TestVectorKind],
        default=TestVectorKind.EPS_FAMILY.value,
    )
    rayleigh.add_argument("--eps", type=float)
    rayleigh.add_argument("--n", type=int, help="omit for the alpha_family closed form")
    _add_common(rayleigh)

    roots = sub.add_parser(Subcommand.ROOTS.value, help="alpha_0, alpha_1, alpha_2, crossings")
    _add_common(roots)

    verify = sub.add_parser(Subcommand.VERIFY.value, help="run invariant suites")
    verify.add_argument("--suite", choices=[s.value for s in Suite], default=Suite.ALL.value)
    _add_common(verify)

    sandwich = sub.add_parser(Subcommand.SANDWICH.value, help="normalised gaps for alpha >= 2")
    _add_grid(sandwich)
    _add_common(sandwich)
    return parser


def seed_info() -> SeedInfoDocument:
    """Computed constants for reproduction logs"""
    from src.roots import alpha_zero, solve_h_roots

    roots = solve_h_roots()
    return SeedInfoDocument(
        version=__version__,
        alpha0=alpha_zero().value,
        alpha1=roots.alpha1.value,
        alpha2=roots.alpha2.value,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command

    Returns:
        0 on success, 1 on runtime or verification failure, 2 on usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    settings = get_settings()
    setup_logger(level=args.log_level or settings.log_level)

    if args.seed_info:
        try:
            sys.stdout.write(ResultFormatter.format_json(seed_info()))
        except HilbertFormsError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_FAILURE
        if args.subcommand is None:
            return EXIT_OK

    if args.subcommand is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        config = RunConfig.from_namespace(args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger.info(f"Running {config.subcommand.value}")
    try:
        output = COMMANDS[config.subcommand](config)
        ResultFormatter.emit(output, config.format, config.output)
    except (HilbertFormsError, OSError, OverflowError) as e:
        logger.error(f"{config.subcommand.value} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    return output.exit_code


def main_entry() -> None:
    """Console-script entry point"""
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
