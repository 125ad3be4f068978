"""Command-line interface.

Subcommands: find-poly, generate, analyze, table2, gold, verify.
Exit codes: 0 success, 1 validation error, 2 verification failure.
All configuration is via flags (no environment variables), and every
command is deterministic given its flags.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from .correlation import analyze_sequences, family_correlation
from .errors import ValidationError, VerificationError
from .family import build_family
from .gf2n import field_make
from .gold import gold_family, gold_max_correlation
from .quadratic import find_primitive_quadratic
from .serialization import (
    dump_family,
    dumps_report,
    extension_for,
    load_family,
    report_to_doc,
)
from .verify import run_checks

TABLE2_PLAIN_MAX = 10


@dataclass(frozen=True)
class Table2Row:
    field_size: int
    seq_length: int
    family_size: int
    max_correlation: int
    bound: int
    balanced_count: int
    modulus: int
    a: int
    b: int
    wall_time: float


def table2_rows(n_min: int, n_max: int, threads: int = 1, force_large: bool = False):
    """One parameter row per field size in the range."""
    if not 1 <= n_min <= n_max:
        raise ValidationError("need 1 <= n_min <= n_max")
    if n_max > TABLE2_PLAIN_MAX and not force_large:
        raise ValidationError(
            f"n_max above {TABLE2_PLAIN_MAX} needs --force-large"
        )
    rows = []
    for n in range(n_min, n_max + 1):
        start = time.perf_counter()
        family = build_family(n)
        report = family_correlation(family, threads=threads, force_large=force_large)
        elapsed = time.perf_counter() - start
        rows.append(
            Table2Row(
                field_size=family.q,
                seq_length=family.length,
                family_size=family.size,
                max_correlation=report.cor,
                bound=family.bound,
                balanced_count=report.balanced_count,
                modulus=family.modulus,
                a=family.a,
                b=family.b,
                wall_time=elapsed,
            )
        )
    return rows


_T2_COLUMNS = (
    ("field_size", 10),
    ("seq_length", 10),
    ("family_size", 11),
    ("max_correlation", 15),
    ("bound", 5),
    ("balanced_count", 14),
    ("modulus", 7),
    ("a", 5),
    ("b", 5),
    ("wall_time", 9),
)


def _format_table2(rows) -> str:
    lines = [" ".join(name.rjust(width) for name, width in _T2_COLUMNS)]
    for row in rows:
        cells = []
        for name, width in _T2_COLUMNS:
            value = getattr(row, name)
            if name == "wall_time":
                value = f"{value:.3f}"
            cells.append(str(value).rjust(width))
        lines.append(" ".join(cells))
    lines.append("note: balanced_count depends on the chosen quadratic modulus")
    return "\n".join(lines)


def _table2_csv(rows) -> str:
    header = ",".join(name for name, _ in _T2_COLUMNS)
    lines = [header]
    for row in rows:
        cells = []
        for name, _ in _T2_COLUMNS:
            value = getattr(row, name)
            cells.append(f"{value:.3f}" if name == "wall_time" else str(value))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _cmd_find_poly(args) -> int:
    ctx = field_make(args.n)
    p = find_primitive_quadratic(ctx)
    print(f"n={ctx.n}")
    print(f"q={ctx.q}")
    print(f"modulus={ctx.modulus}")
    print(f"a={p.a}")
    print(f"b={p.b}")
    return 0


def _cmd_generate(args) -> int:
    ab = None
    if (args.a is None) != (args.b is None):
        raise ValidationError("--a and --b must be given together")
    if args.a is not None:
        ab = (args.a, args.b)
    family = build_family(args.n, modulus=args.modulus, ab=ab)
    out = args.out or f"family_n{args.n}{extension_for(args.format)}"
    dump_family(family, args.format, out)
    print(f"wrote {out}")
    return 0


def _cmd_analyze(args) -> int:
    if (args.path is None) == (args.n is None):
        raise ValidationError("analyze needs a family file or --n, not both")
    if args.path is not None:
        family = load_family(args.path)
    else:
        if args.n > TABLE2_PLAIN_MAX and not args.force_large:
            raise ValidationError(
                f"inline analysis above n={TABLE2_PLAIN_MAX} needs --force-large"
            )
        family = build_family(args.n)
    report = family_correlation(
        family, threads=args.threads, force_large=args.force_large
    )
    text = dumps_report(report, family)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0


def _cmd_table2(args) -> int:
    rows = table2_rows(
        args.n_min, args.n_max, threads=args.threads, force_large=args.force_large
    )
    print(_format_table2(rows))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(_table2_csv(rows))
        print(f"wrote {args.csv}")
    return 0


def _cmd_gold(args) -> int:
    fam = gold_family(args.n)
    report = analyze_sequences(
        fam.sequences, threads=args.threads, force_large=args.force_large
    )
    print(f"n={args.n}")
    print(f"length={report.length}")
    print(f"family_size={report.family_size}")
    print(f"max_correlation={report.cor}")
    print(f"expected_peak={gold_max_correlation(args.n)}")
    return 0


def _cmd_verify(args) -> int:
    results = run_checks(args.n, threads=args.threads)
    failed = 0
    for res in results:
        status = "ok" if res.ok else "FAIL"
        print(f"{status:4s} {res.name}: {res.detail}")
        failed += not res.ok
    if failed:
        print(f"{failed} check(s) failed", file=sys.stderr)
        return 2
    print("all checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projseq",
        description=(
            "Binary sequence families of length 2^n+1 on the projective line "
            "over GF(2^n), with exact correlation analysis and Gold baselines."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads", type=int, default=1, metavar="K", help="worker threads"
    )
    common.add_argument(
        "--force-large",
        action="store_true",
        help="allow full correlation scans beyond length 2^10+1",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("find-poly", help="print the primitive quadratic modulus")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=_cmd_find_poly)

    sp = sub.add_parser("generate", help="build a family and write it to disk")
    sp.add_argument("n", type=int)
    sp.add_argument("--a", type=int, default=None, help="override: linear coefficient")
    sp.add_argument("--b", type=int, default=None, help="override: constant term")
    sp.add_argument(
        "--modulus", type=int, default=None, help="override: binary field modulus"
    )
    sp.add_argument("--format", choices=("json", "csv", "seqbin"), default="json")
    sp.add_argument("--out", default=None, metavar="PATH")
    sp.set_defaults(func=_cmd_generate)

    sp = sub.add_parser(
        "analyze", parents=[common], help="correlation report for a family"
    )
    sp.add_argument("path", nargs="?", default=None, help="family artifact to load")
    sp.add_argument("--n", type=int, default=None, help="generate the family inline")
    sp.add_argument("--out", default=None, metavar="PATH", help="also write the report")
    sp.set_defaults(func=_cmd_analyze)

    sp = sub.add_parser(
        "table2", parents=[common], help="parameter table over a range of n"
    )
    sp.add_argument("n_min", type=int)
    sp.add_argument("n_max", type=int)
    sp.add_argument("--csv", default=None, metavar="PATH", help="also write rows as csv")
    sp.set_defaults(func=_cmd_table2)

    sp = sub.add_parser(
        "gold", parents=[common], help="Gold baseline family for odd n"
    )
    sp.add_argument("n", type=int)
    sp.set_defaults(func=_cmd_gold)

    sp = sub.add_parser(
        "verify", parents=[common], help="run the invariant suite for one n"
    )
    sp.add_argument("n", type=int)
    sp.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
