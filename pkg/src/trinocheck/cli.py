"""Batch CLI: sweep primes, run claim checkers, write a deterministic report.

Exit codes: 0 all checks passed, 1 at least one failed, 2 usage or
internal error.
"""

from __future__ import annotations

import argparse
import sys

from .claims import ClaimId
from .sweep import (
    FORMATS,
    ConfigError,
    SweepConfig,
    parse_claims,
    render,
    run_sweep,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trinocheck",
        description=(
            "Verify trinomial-coefficient and harmonic-sum congruences over a "
            "range of primes, reporting every instance and any counterexample."
        ),
    )
    parser.add_argument("--pmin", type=int, default=5, help="smallest prime to check (>= 5)")
    parser.add_argument("--pmax", type=int, default=1009, help="largest prime to check")
    parser.add_argument("--nmax", type=int, default=8, help="check n = 1..nmax for n-parametrized claims")
    parser.add_argument(
        "--claims",
        default=None,
        metavar="LIST",
        help="comma-separated claim names (default: all; see README for the catalog)",
    )
    parser.add_argument("--format", choices=FORMATS, default="jsonl", dest="fmt")
    parser.add_argument("--out", default=None, metavar="PATH", help="output file (default: stdout)")
    parser.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes, one prime per task")
    parser.add_argument("--fail-fast", action="store_true", help="stop after the first failing record")
    parser.add_argument(
        "--summary-only",
        action="store_true",
        help="collapse per-k records into one aggregate per (claim, p, n)",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        claims = tuple(ClaimId) if args.claims is None else parse_claims(args.claims)
        config = SweepConfig(
            pmin=args.pmin,
            pmax=args.pmax,
            nmax=args.nmax,
            claims=claims,
            fmt=args.fmt,
            out=args.out,
            jobs=args.jobs,
            fail_fast=args.fail_fast,
            summary_only=args.summary_only,
        )
    except ConfigError as exc:
        print(f"trinocheck: error: {exc}", file=sys.stderr)
        return 2

    report = run_sweep(config)
    payload = render(report, config.fmt)
    try:
        if config.out is None:
            sys.stdout.buffer.write(payload)
            sys.stdout.buffer.flush()
        else:
            with open(config.out, "wb") as fh:
                fh.write(payload)
    except OSError as exc:
        print(f"trinocheck: error: {exc}", file=sys.stderr)
        return 2
    return 0 if report.summary.failed == 0 else 1


def entry() -> None:  # console-script shim
    sys.exit(main())
