"""Command-line harness: run identity checks, print coefficient tables,
and cross-check a local OEIS b-file for A034296.

Exit codes are a strict contract for CI use:
  0  everything requested passed
  1  a mathematical mismatch was found
  2  usage or configuration error (unknown check, malformed b-file, ...)

With no subcommand the tool prints the identity catalog, so it doubles
as the index of what exactly is being verified.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from . import identities as ids
from . import partitions as pt
from .identities import CHECKS, CheckReport, genfun_a, run_checks

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    max_order: int = ids.DEFAULT_ORDER
    zdeg: int = ids.DEFAULT_ZDEG
    enumeration_cap: int = pt.DEFAULT_CAP
    checks: list[str] = field(default_factory=lambda: ["all"])
    output_format: str = "text"
    bfile_path: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.max_order < 2:
            raise ValueError("max_order must be >= 2")
        if self.zdeg < 0:
            raise ValueError("zdeg must be >= 0")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


class BFileEntry(NamedTuple):
    n: int
    value: int


class BFileError(ValueError):
    pass


def parse_bfile(path: str) -> list[BFileEntry]:
    """Parse an OEIS b-file: 'n value' per line, '#' comments, blank lines.

    Indices must be strictly increasing; gaps are fine.  Malformed lines
    raise :class:`BFileError` carrying the line number.
    """
    entries: list[BFileEntry] = []
    last_n: int | None = None
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise BFileError(
                    f"{path}:{lineno}: expected 'n value', got {line!r}"
                )
            try:
                n, value = int(fields[0]), int(fields[1])
            except ValueError:
                raise BFileError(
                    f"{path}:{lineno}: non-integer field in {line!r}"
                ) from None
            if last_n is not None and n <= last_n:
                raise BFileError(
                    f"{path}:{lineno}: index {n} not strictly increasing"
                )
            entries.append(BFileEntry(n, value))
            last_n = n
    return entries


# -- verify -----------------------------------------------------------------


def _reports_text(reports: list[CheckReport]) -> str:
    return "\n".join(r.line() for r in reports)


def _reports_json(reports: list[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def _reports_csv(reports: list[CheckReport]) -> str:
    lines = ["name,passed,order,zdeg,mismatch_exponent,mismatch_lhs,mismatch_rhs"]
    for r in reports:
        if r.mismatch is None:
            mm = ",,"
        else:
            e = r.mismatch.exponent
            es = ":".join(str(x) for x in e) if isinstance(e, tuple) else str(e)
            mm = f"{es},{r.mismatch.lhs},{r.mismatch.rhs}"
        zd = "" if r.zdeg is None else str(r.zdeg)
        lines.append(f"{r.name},{str(r.passed).lower()},{r.order},{zd},{mm}")
    return "\n".join(lines)


def _reports_markdown(reports: list[CheckReport]) -> str:
    rows = [["check", "passed", "order", "zdeg", "first mismatch"]]
    for r in reports:
        mm = ""
        if r.mismatch is not None:
            mm = f"{r.mismatch.exponent}: {r.mismatch.lhs} vs {r.mismatch.rhs}"
        rows.append(
            [r.name, "yes" if r.passed else "NO", str(r.order),
             "" if r.zdeg is None else str(r.zdeg), mm]
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    out = []
    for k, row in enumerate(rows):
        out.append("| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |")
        if k == 0:
            out.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
    return "\n".join(out)


def cmd_verify(config: RunConfig) -> int:
    names = list(CHECKS) if config.checks == ["all"] else config.checks
    try:
        reports = run_checks(
            names,
            jobs=config.jobs,
            order=config.max_order,
            zdeg=config.zdeg,
            qorder=2 * config.zdeg,
            cap=config.enumeration_cap,
        )
    except KeyError as e:
        print(f"error: {e.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    renderer = {
        "text": _reports_text,
        "json": _reports_json,
        "csv": _reports_csv,
        "markdown": _reports_markdown,
    }[config.output_format]
    print(renderer(reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


# -- table ------------------------------------------------------------------


def table_rows(
    max_n: int, cap: int = pt.DEFAULT_CAP, distinct_cap: int = pt.DEFAULT_DISTINCT_CAP
) -> list[tuple[int, int, int | None, int | None]]:
    """(n, a_series, a_direct, b_direct) rows; None marks a skipped oracle
    column whose enumeration cap was exceeded."""
    ga = genfun_a(max_n + 1)
    rows = []
    for n in range(1, max_n + 1):
        a_d = pt.a_direct(n, cap) if n <= cap else None
        b_d = pt.b_direct(n, distinct_cap) if n <= distinct_cap else None
        rows.append((n, ga[n], a_d, b_d))
    return rows


def cmd_table(config: RunConfig) -> int:
    rows = table_rows(config.max_order, cap=config.enumeration_cap)
    header = ["n", "a_series", "a_direct", "b_direct"]
    if config.output_format == "json":
        print(json.dumps(
            [dict(zip(header, row)) for row in rows], indent=2
        ))
        return EXIT_OK
    cells = [[str(n), str(a), "-" if ad is None else str(ad),
              "-" if bd is None else str(bd)] for n, a, ad, bd in rows]
    if config.output_format == "csv":
        print(",".join(header))
        for row in cells:
            print(",".join(row))
        return EXIT_OK
    # markdown (also the default for text)
    table = [header] + cells
    widths = [max(len(r[i]) for r in table) for i in range(4)]
    for k, row in enumerate(table):
        print("| " + " | ".join(c.rjust(w) for c, w in zip(row, widths)) + " |")
        if k == 0:
            print("|" + "|".join("-" * (w + 2) for w in widths) + "|")
    return EXIT_OK


# -- oeis -------------------------------------------------------------------


def cmd_oeis(config: RunConfig) -> int:
    if not config.bfile_path:
        print("error: --bfile is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        entries = parse_bfile(config.bfile_path)
    except (OSError, BFileError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    ga = genfun_a(config.max_order)
    compared = [e for e in entries if 1 <= e.n < config.max_order]
    skipped = len(entries) - len(compared)
    mismatches = [(e.n, ga[e.n], e.value) for e in compared if ga[e.n] != e.value]
    if compared:
        lo, hi = compared[0].n, compared[-1].n
        print(
            f"compared {len(compared)} entries in n = {lo}..{hi}"
            + (f" ({skipped} outside 1 <= n < {config.max_order} skipped)" if skipped else "")
        )
    else:
        print(f"no entries with 1 <= n < {config.max_order} to compare")
    if mismatches:
        for n, ours, theirs in mismatches:
            print(f"MISMATCH at n={n}: computed {ours}, b-file has {theirs}")
        return EXIT_MISMATCH
    print("all compared entries match")
    return EXIT_OK


# -- catalog and entry point ---------------------------------------------------


def print_catalog() -> None:
    print("identity catalog (run `gapfree verify --checks NAME` to check one):\n")
    width = max(len(n) for n in CHECKS)
    for name, cdef in CHECKS.items():
        print(f"  {name:<{width}}  {cdef.summary}")
    print(
        "\ndefault windows: series order "
        f"{ids.DEFAULT_ORDER}, bivariate zdeg {ids.DEFAULT_ZDEG} / qorder "
        f"{ids.DEFAULT_QORDER}, enumeration-backed checks at order "
        f"{ids.DEFAULT_ORACLE_ORDER}"
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gapfree",
        description="Exact q-series checks for gap-free partition identities.",
    )
    sub = p.add_subparsers(dest="command")

    pv = sub.add_parser("verify", help="run identity checks")
    pv.add_argument("--checks", default="all",
                    help="comma-separated check names, or 'all'")
    pv.add_argument("--order", type=int, default=ids.DEFAULT_ORDER,
                    help="series truncation order")
    pv.add_argument("--zdeg", type=int, default=ids.DEFAULT_ZDEG,
                    help="z-degree for bivariate checks (qorder is 2*zdeg)")
    pv.add_argument("--cap", type=int, default=pt.DEFAULT_CAP,
                    help="enumeration cap for oracle-backed checks")
    pv.add_argument("--format", default="text",
                    choices=["text", "csv", "json", "markdown"])
    pv.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                    help="worker processes (default: all processors)")

    pt_ = sub.add_parser("table", help="print n, a_series, a_direct, b_direct")
    pt_.add_argument("--max", type=int, required=True, help="largest n")
    pt_.add_argument("--cap", type=int, default=pt.DEFAULT_CAP)
    pt_.add_argument("--format", default="markdown",
                     choices=["csv", "json", "markdown"])

    po = sub.add_parser("oeis", help="cross-check a local A034296 b-file")
    po.add_argument("--bfile", required=True, help="path to the b-file")
    po.add_argument("--order", type=int, default=ids.DEFAULT_ORDER,
                    help="compare entries with n below this order")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command is None:
        print_catalog()
        return EXIT_OK
    try:
        if args.command == "verify":
            checks = (
                ["all"] if args.checks == "all"
                else [c.strip() for c in args.checks.split(",") if c.strip()]
            )
            config = RunConfig(
                max_order=args.order,
                zdeg=args.zdeg,
                enumeration_cap=args.cap,
                checks=checks,
                output_format=args.format,
                jobs=args.jobs,
            )
            return cmd_verify(config)
        if args.command == "table":
            config = RunConfig(
                max_order=args.max,
                enumeration_cap=args.cap,
                output_format=args.format,
            )
            return cmd_table(config)
        if args.command == "oeis":
            config = RunConfig(max_order=args.order, bfile_path=args.bfile)
            return cmd_oeis(config)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
