"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 resource budget exceeded,
4 verification mismatch.  Counts are always emitted as exact decimal
strings (JSON uses strings too; the numbers outgrow doubles quickly).

Oracle budgets can be overridden with the environment variables
``KNOTMOSAICS_MAX_CELLS`` and ``KNOTMOSAICS_MAX_NODES``.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import count, resolve_engine
from .mosaic import (
    format_mosaic,
    format_mosaic_stream,
    is_suitably_connected,
    parse_mosaic_stream,
)
from .oracle import (
    BudgetExceededError,
    EnumBudget,
    complete_to_knot,
    enumerate_knot_mosaics,
    enumerate_suitably_connected,
)
from .render import render_mosaic
from .transfer import build_split, format_state_matrix, state_matrix
from .verify import report_dict, run_checks

OK, USAGE_ERROR, BUDGET_ERROR, MISMATCH_ERROR = 0, 2, 3, 4


def _budget_from_env() -> EnumBudget:
    cells = int(os.environ.get("KNOTMOSAICS_MAX_CELLS", EnumBudget.max_cells))
    nodes = int(os.environ.get("KNOTMOSAICS_MAX_NODES", EnumBudget.max_nodes))
    return EnumBudget(max_cells=cells, max_nodes=nodes)


def _cmd_count(args) -> int:
    engine = resolve_engine(args.m, args.engine)
    value = count(args.m, args.n, engine)
    if args.format == "json":
        print(json.dumps({"m": args.m, "n": args.n, "count": str(value), "engine": engine}))
    elif args.format == "csv":
        print("m,n,count,engine")
        print(f"{args.m},{args.n},{value},{engine}")
    else:
        print(value)
    return OK


def _cmd_table(args) -> int:
    if args.max_n < 1:
        raise ValueError("max_n must be at least 1")
    rows = [(n, count(n, n)) for n in range(1, args.max_n + 1)]
    if args.format == "json":
        print(json.dumps([{"n": n, "count": str(v)} for n, v in rows]))
    elif args.format == "csv":
        print("n,count")
        for n, v in rows:
            print(f"{n},{v}")
    else:
        for n, v in rows:
            print(f"{n} {v}")
    return OK


def _cmd_verify(args) -> int:
    level = "full" if args.full else "quick"
    try:
        results = run_checks(level, _budget_from_env())
    except BudgetExceededError as exc:
        print(json.dumps({"level": level, "error": f"budget exceeded: {exc}"}))
        return BUDGET_ERROR
    print(json.dumps(report_dict(level, results)))
    return OK if all(r.ok for r in results) else MISMATCH_ERROR


def _cmd_enumerate(args) -> int:
    budget = _budget_from_env()
    if args.knot:
        stream = enumerate_knot_mosaics(args.m, args.n, budget)
    else:
        stream = enumerate_suitably_connected(args.m, args.n, budget)
    emitted = 0
    for mosaic in stream:
        if args.limit is not None and emitted >= args.limit:
            break
        if emitted:
            print()
        print(format_mosaic(mosaic), end="")
        emitted += 1
    print(f"count {emitted}")
    return OK


def _cmd_complete(args) -> int:
    mosaics = parse_mosaic_stream(_read(args.file))
    if len(mosaics) != 1:
        raise ValueError("expected exactly one mosaic document")
    inner = mosaics[0]
    if not is_suitably_connected(inner):
        raise ValueError("mosaic is not suitably connected")
    print(format_mosaic_stream(complete_to_knot(inner)), end="")
    return OK


def _cmd_render(args) -> int:
    mosaics = parse_mosaic_stream(_read(args.file))
    if not mosaics:
        raise ValueError("no mosaic documents in input")
    print("\n\n".join(render_mosaic(m) for m in mosaics))
    return OK


def _cmd_growth(args) -> int:
    if args.max_n < 2:
        raise ValueError("max_n must be at least 2")
    for n in range(2, args.max_n + 1):
        d = count(n, n)
        # diagnostic output only; counts themselves never touch floats
        ratio = math.exp(math.log(d) / (n * n))
        print(f"{n} {ratio:.4f}")
    return OK


def _cmd_dump_matrix(args) -> int:
    if args.p < 0:
        raise ValueError("p must be non-negative")
    if args.kind in ("X", "O"):
        split = build_split(args.p)
        matrix = split.x if args.kind == "X" else split.o
    else:
        matrix = state_matrix(args.p, args.q)
    print(format_state_matrix(matrix, args.kind), end="")
    return OK


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotmosaics",
        description="Count, enumerate and render knot mosaics.",
        epilog="Budgets: set KNOTMOSAICS_MAX_CELLS / KNOTMOSAICS_MAX_NODES to "
        "override the enumeration limits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of m x n knot mosaics")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--engine", choices=["dense", "matrixfree", "auto"], default="auto")
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="diagonal counts for n = 1..max_n")
    p.add_argument("max_n", type=int)
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="cross-check the engines against brute force")
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="list mosaics in 'mosaic v1' documents")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--knot", action="store_true", help="closed boundary only")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("complete", help="frame a mosaic into its two knot mosaics")
    p.add_argument("file")
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("render", help="draw mosaic documents as ASCII")
    p.add_argument("file")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("growth", help="report count(n,n) ** (1/n^2)")
    p.add_argument("max_n", type=int)
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("dump-matrix", help="print a state matrix")
    p.add_argument("p", type=int)
    p.add_argument("--kind", choices=["X", "O", "N"], default="N")
    p.add_argument("--q", type=int, default=1)
    p.set_defaults(func=_cmd_dump_matrix)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BUDGET_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
