"""Command-line front end: scans, checks, tables, and verification suites.

A thin layer over the library; all number crunching lives in the core
modules.  Exit codes: 0 success, 1 verification failure, 2 usage error.
Output is byte-identical for a fixed command line regardless of --threads.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from typing import Iterable

from . import barriers as bar
from . import density as dens
from . import gaps as gp
from . import tables
from . import verify as ver
from .arith import BudgetError, Eps, build_sieve, parse_eps

ENV_THREADS = "BARRIERLAB_THREADS"

BARRIER_HEADER = ["n", "is_barrier", "witness", "method"]
DENSITY_HEADER = ["r", "t", "count", "interval_len", "ratio"]
GAP_HEADER = ["n", "gap", "argmax_m", "lemma_bound"]
CLASSIFY_HEADER = ["n", "s"]
SUBSEQ_HEADER = ["s", "i", "value"]
VERIFY_HEADER = ["suite", "check", "passed", "detail"]


@dataclass
class RunConfig:
    command: str
    eps: Eps | None = None
    lo: int | None = None
    hi: int | None = None
    n: int | None = None
    limit: int | None = None
    r_max: int | None = None
    t: int | None = None
    s: int | None = None
    count: int | None = None
    method: str = "naive"
    suites: list[str] = field(default_factory=lambda: ["all"])
    fmt: str = "csv"
    out: str | None = None
    threads: int = 1


def _default_threads() -> int:
    raw = os.environ.get(ENV_THREADS, "")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return value if value >= 1 else 1


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) != 2 or not parts[0].isdigit() or not parts[1].isdigit():
        raise ValueError(f"range must be LO..HI with integers, got {text!r}")
    return int(parts[0]), int(parts[1])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barrierlab",
        description="Barrier scans, primorial-interval densities, and divisor-gap tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="write the table to a file instead of stdout")
        p.add_argument("--threads", type=int, default=None,
                       help=f"worker threads (default from ${ENV_THREADS} or 1)")

    p = sub.add_parser("barriers", help="list barriers in a range")
    p.add_argument("--eps", type=parse_eps, required=True, metavar="NUM/DEN")
    p.add_argument("--range", dest="range_text", required=True, metavar="LO..HI")
    common(p)

    p = sub.add_parser("check", help="verdict for a single n")
    p.add_argument("--eps", type=parse_eps, required=True, metavar="NUM/DEN")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("naive", "windowed"), default="naive")
    common(p)

    p = sub.add_parser("density", help="low-omega density rows per interval")
    p.add_argument("--eps", type=parse_eps, required=True, metavar="NUM/DEN")
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--t", type=int, default=None, help="override the eps-derived t")
    common(p)

    p = sub.add_parser("gaps", help="gap record for every n up to a limit")
    p.add_argument("--limit", type=int, required=True)
    common(p)

    p = sub.add_parser("records", help="record points of the gap statistic")
    p.add_argument("--limit", type=int, required=True)
    common(p)

    p = sub.add_parser("classify", help="subsequence index of one n")
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("subseq", help="leading members of one subsequence")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    common(p)

    p = sub.add_parser("verify", help="run invariant suites; exit 1 on any failure")
    p.add_argument("--suite", default="all",
                   help="comma-separated suite names (default: all)")
    p.add_argument("--eps", type=parse_eps, default=None, metavar="NUM/DEN")
    p.add_argument("--limit", type=int, default=None,
                   help="scale override for the heavier suites")
    common(p)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(command=args.command)
    config.fmt = args.format
    config.out = args.out
    config.threads = args.threads if args.threads is not None else _default_threads()
    if config.threads < 1:
        raise ValueError(f"threads must be >= 1, got {config.threads}")
    config.eps = getattr(args, "eps", None)
    if args.command == "barriers":
        config.lo, config.hi = _parse_range(args.range_text)
        if config.lo > config.hi:
            raise ValueError(f"empty range {config.lo}..{config.hi}")
    elif args.command in ("check", "classify"):
        config.n = args.n
        if args.command == "check":
            config.method = args.method
    elif args.command == "density":
        config.r_max = args.rmax
        config.t = args.t
    elif args.command in ("gaps", "records"):
        config.limit = args.limit
    elif args.command == "subseq":
        config.s = args.s
        config.count = args.count
    elif args.command == "verify":
        config.suites = [name.strip() for name in args.suite.split(",") if name.strip()]
        config.limit = args.limit
    return config


def _verdict_row(v: bar.BarrierVerdict) -> list:
    return [v.n, v.is_barrier, v.witness, v.method]


def _execute(config: RunConfig) -> tuple[list[str], Iterable[list], str | None, bool]:
    """Returns (header, rows, range description, verification failed)."""
    if config.command == "barriers":
        verdicts = bar.scan_barriers(config.lo, config.hi, config.eps, threads=config.threads)
        return (BARRIER_HEADER, [_verdict_row(v) for v in verdicts],
                f"{config.lo}..{config.hi}", False)

    if config.command == "check":
        sieve = build_sieve(max(config.n - 1, 2))
        if config.method == "windowed":
            verdict = bar.is_barrier_windowed(config.n, config.eps, sieve)
        else:
            verdict = bar.is_barrier_naive(config.n, config.eps, sieve)
        return BARRIER_HEADER, [_verdict_row(verdict)], str(config.n), False

    if config.command == "density":
        rows = dens.density_table(config.r_max, config.eps, t=config.t, threads=config.threads)
        table = [
            [row.r, row.t, row.count, row.interval_len,
             tables.ratio_text(row.count, row.interval_len)]
            for row in rows
        ]
        return DENSITY_HEADER, table, f"1..{config.r_max}", False

    if config.command == "gaps":
        # streamed: a large --limit produces one row per n
        table = (
            [rec.n, rec.gap, rec.argmax_m, rec.lemma_bound]
            for rec in gp.scan_gap_stats(config.limit)
        )
        return GAP_HEADER, table, f"2..{config.limit}", False

    if config.command == "records":
        table = [
            [rec.n, rec.gap, rec.argmax_m, rec.lemma_bound]
            for rec in gp.record_points(config.limit)
        ]
        return GAP_HEADER, table, f"2..{config.limit}", False

    if config.command == "classify":
        sieve = build_sieve(max(config.n - 1, 2))
        s = gp.classify_subsequence(config.n, sieve)
        return CLASSIFY_HEADER, [[config.n, s]], str(config.n), False

    if config.command == "subseq":
        values = gp.gen_subsequence(config.s, config.count)
        table = [[config.s, i, value] for i, value in enumerate(values, start=1)]
        return SUBSEQ_HEADER, table, f"1..{config.count}", False

    if config.command == "verify":
        results = ver.run_suites(config.suites, eps=config.eps, limit=config.limit)
        table = [[r.suite, r.check, r.passed, r.detail] for r in results]
        failed = any(not r.passed for r in results)
        return VERIFY_HEADER, table, None, failed

    raise ValueError(f"unknown command {config.command!r}")


def run(config: RunConfig) -> int:
    """Execute one command; table goes to stdout or --out."""
    header, rows, range_text, failed = _execute(config)
    if config.fmt == "json":
        text = tables.render_json(config.command, config.eps, range_text, header, rows)
    else:
        text = tables.render_csv(header, rows)
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return run(config_from_args(args))
    except (ValueError, OverflowError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
