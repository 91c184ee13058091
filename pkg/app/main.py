"""
Spectral Forge - command-line entry point

Subcommands: derive, verify, matrix, limits, sweep. Exit codes: 0 ok,
1 a verification failed, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from app.application.ports.report_exporter import Document
from app.application.use_cases.build_theta_matrix import BuildThetaMatrix, BuildThetaMatrixRequest
from app.application.use_cases.derive_expansion import DeriveExpansion, DeriveExpansionRequest
from app.application.use_cases.run_limit_checks import RunLimitChecks, RunLimitChecksRequest
from app.application.use_cases.run_oracle_sweep import RunOracleSweep, RunOracleSweepRequest
from app.application.use_cases.run_verification import SUITES, RunVerification, RunVerificationRequest
from app.cli import presenters
from app.config import Settings, get_settings
from app.domain.exceptions import DomainException
from app.domain.services.problem_catalog import list_problems
from app.infrastructure.export import FORMATS, get_exporter
from app.infrastructure.logging import setup_logging

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

APP_DESCRIPTION = "Asymptotic eigenvalue and wave-function expansions for periodic Schrödinger operators."

Outcome = Tuple[Document, bool]  # (document, passed)


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forge", description=APP_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    commands = parser.add_subparsers(dest="command", required=True)

    derive = commands.add_parser("derive", help="coefficient tables for one problem")
    derive.add_argument("--problem", required=True, choices=list_problems())
    derive.add_argument("--order", type=int, default=settings.default_order)
    derive.add_argument("--sign", type=int, choices=(1, -1), default=1)
    _add_output_flags(derive)

    verify = commands.add_parser("verify", help="run verification suites")
    verify.add_argument("suites", nargs="*", metavar="SUITE", help=f"any of {', '.join(SUITES)} (default: all)")
    verify.add_argument("--order", type=int, default=settings.default_order)
    verify.add_argument("--n-max", type=int, default=200, help="range of the divisor checks")
    verify.add_argument("--k", type=int, default=4, help="highest derivative matrix in the divisor checks")
    verify.add_argument("--h", type=float, default=1.0)
    verify.add_argument("--alpha", type=float, default=6.0)
    verify.add_argument("--q", type=float, default=0.02)
    verify.add_argument("--nu", type=float, default=10.0)
    verify.add_argument("--tol", type=float, default=None, help="override the composed-check tolerance")
    _add_output_flags(verify)

    matrix = commands.add_parser("matrix", help="coefficient matrix of -ln theta4")
    matrix.add_argument("--k", type=int, default=0)
    matrix.add_argument("--dim", type=int, default=settings.matrix_dim)
    _add_output_flags(matrix)

    limits = commands.add_parser("limits", help="Lame to Mathieu limit checks")
    limits.add_argument("--order", type=int, default=settings.default_order)
    limits.add_argument(
        "--q", type=float, nargs="+", default=[1e-2, 1e-3, 1e-4], help="0 alone runs the exact checks only"
    )
    limits.add_argument("--h", type=float, default=1.0)
    _add_output_flags(limits)

    sweep = commands.add_parser("sweep", help="series against the numeric oracle on a grid")
    sweep.add_argument("--problem", required=True, choices=("mathieu-large", "lame-large", "mathieu-minpi2"))
    sweep.add_argument("--nu", type=float, nargs="+", default=None, help="grid of nu (large energy)")
    sweep.add_argument("--h", type=float, nargs="+", default=None, help="h, or the grid of h for mathieu-minpi2")
    sweep.add_argument("--alpha", type=float, default=6.0)
    sweep.add_argument("--q", type=float, default=0.05)
    sweep.add_argument("--order", type=int, default=7, help="first power of 1/nu dropped from lambda")
    sweep.add_argument("--tol", type=float, default=settings.oracle_tol)
    _add_output_flags(sweep)
    return parser


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_derive(args: argparse.Namespace, settings: Settings) -> Outcome:
    result = DeriveExpansion().execute(
        DeriveExpansionRequest(
            problem_id=args.problem, order=args.order, sign=args.sign, max_order=settings.max_order
        )
    )
    return presenters.derive_document(result), True


def cmd_verify(args: argparse.Namespace, settings: Settings) -> Outcome:
    result = RunVerification().execute(
        RunVerificationRequest(
            suites=tuple(args.suites) or tuple(SUITES),
            order=args.order,
            h=args.h,
            alpha=args.alpha,
            q=args.q,
            nu=args.nu,
            n_max=args.n_max,
            k_max=args.k,
            k_dim=settings.matrix_dense_dim,
            oracle_tol=settings.oracle_tol,
            function_tol=settings.function_tol,
            composed_tol=args.tol if args.tol is not None else settings.composed_tol,
            threads=settings.threads,
        )
    )
    return presenters.verify_document(result), result.passed


def cmd_matrix(args: argparse.Namespace, settings: Settings) -> Outcome:
    result = BuildThetaMatrix().execute(
        BuildThetaMatrixRequest(k=args.k, dim=args.dim, max_dim=settings.matrix_dense_dim)
    )
    return presenters.matrix_document(result), True


def cmd_limits(args: argparse.Namespace, settings: Settings) -> Outcome:
    samples = tuple(q for q in args.q if q != 0)
    result = RunLimitChecks().execute(RunLimitChecksRequest(check_order=args.order, q_samples=samples, h=args.h))
    return presenters.limits_document(result), result.passed


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> Outcome:
    small = args.problem == "mathieu-minpi2"
    grid = args.h if small else args.nu
    h = 1.0 if small or not args.h else args.h[0]
    result = RunOracleSweep().execute(
        RunOracleSweepRequest(
            problem_id=args.problem,
            grid=tuple(grid or ()),
            keep=args.order,
            h=h,
            alpha=args.alpha,
            q=args.q,
            tol=args.tol,
        )
    )
    return presenters.sweep_document(result), result.check.passed


COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings], Outcome]] = {
    "derive": cmd_derive,
    "verify": cmd_verify,
    "matrix": cmd_matrix,
    "limits": cmd_limits,
    "sweep": cmd_sweep,
}


def _emit(document: Document, format_name: str, out: Optional[str]) -> None:
    text = get_exporter(format_name).render(document)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    args = build_parser(settings).parse_args(argv)
    logger = setup_logging(settings.log_level)
    logger.info("command_started", command=args.command, version=settings.app_version)
    try:
        document, passed = COMMANDS[args.command](args, settings)
    except DomainException as exc:
        logger.error("command_rejected", command=args.command, error=type(exc).__name__, detail=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(document, args.format, args.out)
    logger.info("command_finished", command=args.command, passed=passed)
    return EXIT_OK if passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
