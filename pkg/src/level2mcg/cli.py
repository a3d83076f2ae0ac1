"""Command-line driver: ``level2mcg verify | tau1 | dims``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .catalog import ExprSyntaxError, IndexOutOfRange, parse_expr
from .johnson import NotLevel2, NotLiftable, tau1
from .report import (
    any_failed,
    dims_row,
    dims_to_csv,
    dims_to_json,
    dims_to_text,
    reports_to_csv,
    reports_to_json,
    reports_to_text,
    run_suite,
)
from .suites import SUITES

MAX_GENUS = 64
DEFAULT_SEED = 20130101


class UsageError(ValueError):
    pass


def parse_genus_range(text: str, low: int = 2) -> list[int]:
    """``4`` or ``4..6``."""
    try:
        if ".." in text:
            a, b = (int(x) for x in text.split("..", 1))
        else:
            a = b = int(text)
    except ValueError:
        raise UsageError(f"bad genus range {text!r}; use A or A..B") from None
    if a > b:
        raise UsageError(f"empty genus range {text!r}")
    if b > MAX_GENUS:
        raise UsageError(f"genus {b} exceeds {MAX_GENUS}: ambient spaces grow as g^3")
    if a < low:
        raise UsageError(f"genus must be >= {low}")
    return list(range(a, b + 1))


def parse_suites(text: str) -> list[str]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    if "all" in names:
        return list(SUITES)
    bad = [n for n in names if n not in SUITES]
    if bad or not names:
        raise UsageError(f"unknown suite(s) {bad}; choose from {', '.join(SUITES)}, all")
    return names


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.write_text(text if text.endswith("\n") else text + "\n")


def _run_one(job: tuple[str, int, int]):
    name, g, seed = job
    return run_suite(name, g, seed)


def cmd_verify(args: argparse.Namespace) -> int:
    genera = parse_genus_range(args.genus)
    suites = parse_suites(args.suite)
    jobs = [(name, g, args.seed) for g in genera for name in suites]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_one, jobs))
    else:
        reports = [_run_one(j) for j in jobs]
    if args.format == "json":
        text = reports_to_json(reports, args.seed)
    elif args.format == "csv":
        text = reports_to_csv(reports)
    else:
        text = reports_to_text(reports)
    _emit(text, args.out)
    return 1 if any_failed(reports) else 0


def cmd_tau1(args: argparse.Namespace) -> int:
    g = args.genus
    if not 2 <= g <= MAX_GENUS:
        raise UsageError(f"genus must be in 2..{MAX_GENUS}")
    expr = parse_expr(args.expr, g)
    result = tau1(expr)
    value = result.value
    if args.format == "json":
        text = json.dumps(
            {
                "genus": g,
                "expr": str(expr),
                "support": [list(m) for m in value.monomials()],
                "derived_closed_form": result.derived,
            },
            sort_keys=True,
        )
    elif args.format == "csv":
        text = "i,j,k\n" + "".join(f"{i},{j},{k}\n" for i, j, k in value.monomials())
    else:
        text = str(value)
        if result.derived:
            text += "\n# includes derived closed form for T2(i,j,k,l)"
    _emit(text, args.out)
    return 0


def cmd_dims(args: argparse.Namespace) -> int:
    rows = [dims_row(g) for g in parse_genus_range(args.genus, low=3)]
    if args.format == "json":
        text = dims_to_json(rows)
    elif args.format == "csv":
        text = dims_to_csv(rows)
    else:
        text = dims_to_text(rows)
    _emit(text, args.out)
    return 1 if any(r["mismatch"] for r in rows) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="level2mcg",
        description="Verify the mod-2 Johnson homomorphism computations for the level-2 mapping class group of N_g.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", type=Path, default=None, help="write output to PATH instead of stdout")

    v = sub.add_parser("verify", help="run verification suites over a genus range")
    v.add_argument("--genus", "-g", required=True, help="A or A..B (2..64)")
    v.add_argument("--suite", default="all", help=f"comma list of: {', '.join(SUITES)}, all")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--jobs", type=int, default=1, help="worker processes; output order is unaffected")
    common(v)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tau1", help="evaluate tau_1 on an expression")
    t.add_argument("--genus", "-g", type=int, required=True)
    t.add_argument("expr", help='e.g. "Y(1,2)^-1 * Y(2,1)"')
    common(t)
    t.set_defaults(func=cmd_tau1)

    d = sub.add_parser("dims", help="dimension table: formulas against computed ranks")
    d.add_argument("--genus", "-g", required=True, help="A or A..B (3..64)")
    common(d)
    d.set_defaults(func=cmd_dims)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ExprSyntaxError, IndexOutOfRange) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (NotLevel2, NotLiftable) as err:
        print(f"error: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
