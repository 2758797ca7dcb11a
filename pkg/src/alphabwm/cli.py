"""Command-line front end: solve, consistency, ci-table, divide and serve."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .consistency import ci_table
from .fuzzy import (DivisionDomainError, TriangularFuzzyNumber, alpha_cut,
                    approximate_quotient, exact_quotient_membership)
from .model import AlphaGrid, ValidationError, load_document, uniform_grid
from .reporting import (ci_table_text, consistency_payload, consistency_table,
                        solve_payload, solve_table)
from .solver import SolverError, SolverOptions

EXIT_INPUT = 2
EXIT_SOLVER = 3


def _grid_from_args(args) -> AlphaGrid:
    if getattr(args, "grid", None):
        levels = tuple(float(tok) for tok in args.grid.split(","))
        return AlphaGrid(levels)
    m = getattr(args, "m", None)
    return uniform_grid(m if m is not None else 17)


def _parse_tfn(text: str) -> TriangularFuzzyNumber:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected 'a,b,c', got {text!r}")
    return TriangularFuzzyNumber(*(float(p) for p in parts))


def cmd_solve(args) -> int:
    system = load_document(args.input)
    grid = _grid_from_args(args)
    opts = SolverOptions(seed=args.seed, optimality_tol=args.tol)
    try:
        payload = solve_payload(system, grid, opts)
    except SolverError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(solve_table(payload))
    return 0


def cmd_consistency(args) -> int:
    system = load_document(args.input)
    if not hasattr(system, "best_to_others"):
        print("consistency analysis expects a flat comparison system",
              file=sys.stderr)
        return EXIT_INPUT
    grid = uniform_grid(args.grid_points)
    try:
        payload = consistency_payload(system, grid, threshold=args.threshold)
    except SolverError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(consistency_table(payload))
    return 0


def cmd_ci_table(args) -> int:
    rows = ci_table()
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        print(ci_table_text(rows))
    return 0


def cmd_divide(args) -> int:
    num = _parse_tfn(args.numerator)
    den = _parse_tfn(args.denominator)
    if not (den.a > 0.0 or den.c < 0.0):
        raise DivisionDomainError(
            f"divisor support [{den.a}, {den.c}] must exclude zero")
    approx = approximate_quotient(
        num, den) if den.a > 0.0 else approximate_quotient(
        TriangularFuzzyNumber(-num.c, -num.b, -num.a),
        TriangularFuzzyNumber(-den.c, -den.b, -den.a))
    support_lo = min(num.a / den.a, num.a / den.c, num.c / den.a, num.c / den.c)
    support_hi = max(num.a / den.a, num.a / den.c, num.c / den.a, num.c / den.c)
    n = args.samples
    print("x,exact,approx")
    for k in range(n):
        x = support_lo + (support_hi - support_lo) * k / (n - 1)
        exact = exact_quotient_membership(num, den, x)
        print(f"{x!r},{exact!r},{approx.membership(x)!r}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    port = int(os.environ.get("PORT", args.port))
    app = create_app(threshold=args.threshold)
    uvicorn.run(app, host="0.0.0.0", port=port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphabwm",
        description="Fuzzy best-worst criterion weights via alpha-cut intervals")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a comparison system for weights")
    p.add_argument("input", help="JSON comparison system or hierarchy")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--m", type=int, default=None,
                   help="uniform alpha-grid size (default 17)")
    g.add_argument("--grid", default=None,
                   help="explicit comma-separated alpha levels incl. 0 and 1")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=5e-4)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("consistency", help="check the consistency conditions")
    p.add_argument("input")
    p.add_argument("--grid-points", type=int, default=17)
    p.add_argument("--threshold", type=float, default=0.1,
                   help="CR acceptability threshold (convention, default 0.1)")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_consistency)

    p = sub.add_parser("ci-table", help="print the CI lower-bound table")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_ci_table)

    p = sub.add_parser("divide",
                       help="exact vs approximate fuzzy quotient membership CSV")
    # let comma-separated TFNs with a leading minus parse as positionals
    p._negative_number_matcher = re.compile(r"^-\d[\d.,-]*$")
    p.add_argument("numerator", help="TFN as 'a,b,c'")
    p.add_argument("denominator", help="TFN as 'a,b,c'")
    p.add_argument("--samples", type=int, default=201)
    p.set_defaults(func=cmd_divide)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--threshold", type=float, default=0.1)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, DivisionDomainError, ValueError,
            json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
