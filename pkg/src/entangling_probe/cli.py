"""Command-line front end: ``sweep``, ``simulate`` and ``verify``.

Examples::

    entangling-probe sweep --e-min 0 --e-max 1/3 --steps 101 --format csv
    entangling-probe simulate --error-rate 0.25 --trials 1000000 --seed 42
    entangling-probe verify --tolerance 1e-12 --grid-points 1000

Error rates accept decimals or fractions such as ``1/3``. Exit status is 0
on success, 1 when ``verify`` finds violations and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import reporting
from .closed_form import E_MAX, DomainError
from .mc_protocol import SessionConfig, run_session

RANGE_MSG = "valid range is [0, 1/3]"


def _real(text: str) -> float:
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None


def _error_rate(text: str) -> float:
    v = _real(text)
    if not 0.0 <= v <= E_MAX:
        raise argparse.ArgumentTypeError(f"error rate {text} out of range; {RANGE_MSG}")
    return v


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        reporting.atomic_write(out, text)


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = reporting.sweep_rows(args.e_min, args.e_max, args.steps)
    text = reporting.rows_to_csv(rows) if args.format == "csv" else reporting.rows_to_json(rows)
    _emit(text, args.out)
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    config = SessionConfig(args.error_rate, args.trials, args.seed)
    record = reporting.simulation_record(config, run_session(config))
    if args.format == "csv":
        text = reporting.simulation_to_csv(record)
    else:
        text = reporting.simulation_to_json(record)
    _emit(text, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    violations = reporting.verify_invariants(args.tolerance, args.grid_points)
    n = len(reporting.verification_grid(args.grid_points))
    if not violations:
        print(f"PASS: all invariants hold on {n} error rates (tolerance {args.tolerance:g})")
        return 0
    for v in violations:
        print(f"FAIL {v}")
    print(f"{len(violations)} violation(s) on {n} error rates (tolerance {args.tolerance:g})")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entangling-probe",
        description="Entangling-probe attack on BB84: tradeoff tables, Monte Carlo sessions, checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", metavar="PATH", default=None, help="output file (default: stdout)")

    p = sub.add_parser("sweep", help="tabulate eta, Q, Renyi gain and Helstrom probability")
    p.add_argument("--e-min", type=_error_rate, default=0.0)
    p.add_argument("--e-max", type=_error_rate, default=E_MAX)
    p.add_argument("--steps", type=int, default=101)
    add_output(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("simulate", help="run a seeded Monte Carlo BB84 session")
    p.add_argument("--error-rate", type=_error_rate, required=True)
    p.add_argument("--trials", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    add_output(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="check every invariant on a grid of error rates")
    p.add_argument("--tolerance", type=_real, default=1e-12)
    p.add_argument("--grid-points", type=int, default=1000)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ValueError) as exc:
        parser.error(f"{args.command}: {exc}")


if __name__ == "__main__":
    sys.exit(main())
