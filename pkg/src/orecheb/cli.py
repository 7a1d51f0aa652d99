"""orecheb command line: rec, verify, bench, catalog.

Exit codes: 0 success, 2 parse/usage error, 3 verification failure,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from fractions import Fraction

from .bench import run_bench
from .chebrec import Algorithm, InternalConsistencyError, reduce_order, run_algorithm
from .field import RatPoly, counting
from .ore import OreError, RecOp
from .parsing import ParseError, parse_operator
from .series import SeriesError, coefficients_for, get_function, verify_annihilation, CATALOG

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VERIFY = 3
EXIT_INTERNAL = 4

ALGO_NAMES = [a.value for a in Algorithm]


# ---------------------------------------------------------------------------
# recurrence documents


def poly_to_ints(p: RatPoly) -> list[int]:
    out = []
    for c in p.coeffs:
        if c.denominator != 1:
            raise ValueError(f"non-integer coefficient {c} in {p.to_str('n')}")
        out.append(int(c))
    return out


def op_to_table(op: RecOp) -> list[list[int]]:
    """Coefficient table: entry j is r_j as integer coefficients, lowest degree first."""
    rows = []
    for j in range(op.lo, op.hi + 1):
        c = op.coeff(j)
        if not c.is_poly():
            raise ValueError("coefficient table needs polynomial coefficients")
        rows.append(poly_to_ints(c.num))
    return rows


def table_to_op(table: list[list[int]], offset: int = 0) -> RecOp:
    return RecOp([RatPoly([Fraction(v) for v in row]) for row in table], offset)


def _index(var: str, j: int) -> str:
    if j == 0:
        return f"{var}[n]"
    return f"{var}[n+{j}]" if j > 0 else f"{var}[n-{-j}]"


def format_equation(op: RecOp, var: str = "c", ascending: bool = False) -> str:
    """Indexed equation text such as ``c[n+2] + (2*n+2)*c[n+1] - c[n] = 0``."""
    items = sorted(op.terms().items(), reverse=not ascending)
    if not items:
        return "0 = 0"
    parts = []
    for j, c in items:
        if not c.is_poly():
            raise ValueError("equation text needs polynomial coefficients")
        p = c.num
        neg = p.lc() < 0
        if neg:
            p = -p
        body = p.to_str("n").replace(" ", "")
        if p.is_one():
            term = _index(var, j)
        else:
            if len([v for v in p.coeffs if v]) > 1:
                body = f"({body})"
            term = f"{body}*{_index(var, j)}"
        parts.append(("-" if neg else "+", term))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        text += f" {sign} {term}"
    return text + " = 0"


def _table_block(op: RecOp) -> dict:
    return {"support_offset": op.lo, "coefficients": op_to_table(op)}


def build_document(
    source: str,
    result,
    centered: bool = False,
    timing_ms: float | None = None,
    op_count: int | None = None,
    reduced: bool = False,
) -> dict:
    """JSON-ready description of a result.

    ``coefficients`` is the canonical recurrence, the same for every algorithm.
    For a fraction result the exact pair den^-1 num is added under
    ``denominator`` and ``numerator``; the two share one left normalization,
    so the numerator may differ from the recurrence by a factor in Q(n).
    """
    op = result.operator
    offset = -(op.degree // 2) if centered else 0
    shown = op.shift(offset)
    doc = {
        "algorithm": result.algorithm.value,
        "input": source,
        "order": op.degree,
        "support_offset": offset,
        "coefficients": op_to_table(shown),
        "equation": format_equation(shown, ascending=centered),
        "reduced": reduced,
        "disclaimer": result.hypothesis_note,
        "timing_ms": timing_ms,
        "op_count": op_count,
    }
    if result.denominator is not None:
        doc["denominator"] = _table_block(result.denominator)
        doc["numerator"] = _table_block(result.numerator)
    return doc


def document_operator(doc: dict) -> RecOp:
    """The recurrence operator a document describes, at its printed offset."""
    return table_to_op(doc["coefficients"], doc["support_offset"])


def document_fraction(doc: dict) -> tuple[RecOp, RecOp] | None:
    """(den, num) of a fraction result, or None."""
    if "denominator" not in doc:
        return None
    den, num = doc["denominator"], doc["numerator"]
    return (
        table_to_op(den["coefficients"], den["support_offset"]),
        table_to_op(num["coefficients"], num["support_offset"]),
    )


def dump_json(doc: dict) -> str:
    text = json.dumps(doc, indent=2)
    # keep integer coefficient lists on one line
    return re.sub(r"\[\s*(-?\d+(?:,\s*-?\d+)*)?\s*\]",
                  lambda m: "[" + re.sub(r"\s+", " ", m.group(1) or "") + "]", text)


def render_text(doc: dict) -> str:
    lines = [
        f"algorithm: {doc['algorithm']}" + (" (order reduced)" if doc["reduced"] else ""),
        f"input:     {doc['input']}",
        f"order:     {doc['order']}",
        f"recurrence: {doc['equation']}",
    ]
    frac = document_fraction(doc)
    if frac is not None:
        lines.append(f"fraction:   Q^-1 P with")
        lines.append(f"  Q = {frac[0].to_str()}")
        lines.append(f"  P = {frac[1].to_str()}")
    lines.append(f"time: {doc['timing_ms']:.2f} ms, ops: {doc['op_count']}")
    lines.append(f"note: {doc['disclaimer']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands


def cmd_rec(args) -> int:
    L = parse_operator(args.op)
    if L.is_zero() or L.order < 1:
        print("error: operator must have order >= 1", file=sys.stderr)
        return EXIT_PARSE
    with counting() as ctr:
        t0 = time.perf_counter()
        res = run_algorithm(args.algo, L)
        if args.reduce:
            res = reduce_order(res, L.order)
        ms = (time.perf_counter() - t0) * 1000
    doc = build_document(args.op, res, args.centered, ms, ctr.ops, args.reduce)
    if args.format == "json":
        print(dump_json(doc))
    else:
        print(render_text(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    f = get_function(args.function)
    tol = args.tol if args.tol is not None else f.tol
    res = run_algorithm(args.algo, f.operator_for_verification)
    c = coefficients_for(f, args.N)
    rep = verify_annihilation(res.operator, c, tol=tol)
    print(f"function:   {f.name} ({f.coeff_source} coefficients, N={args.N})")
    print(f"algorithm:  {res.algorithm.value}")
    print(f"recurrence: {format_equation(res.operator)}")
    print(rep.summary())
    return EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_bench(args) -> int:
    seed = int(os.environ.get("ORECHEB_SEED", args.seed))
    rows = run_bench(args.dmax, args.kmax, seed, lewanowicz_kmax=args.lewanowicz_kmax)
    print(f"seed {seed}, degree {args.dmax}")
    print(f"{'k':>4} {'algorithm':<11} {'order':>5} {'time_ms':>10} {'ops':>12}")
    for m in rows:
        print(f"{m.k:>4} {m.algorithm.value:<11} {m.result.order:>5} {m.seconds * 1000:>10.2f} {m.ops:>12}")
    by_k: dict[int, dict] = {}
    for m in rows:
        by_k.setdefault(m.k, {})[m.algorithm] = m
    print()
    print(f"{'k':>4} {'ops paszkowski/dac':>19} {'time paszkowski/dac':>20}")
    for k, ms in by_k.items():
        p, d = ms.get(Algorithm.PASZKOWSKI), ms.get(Algorithm.DAC)
        if p and d:
            print(f"{k:>4} {p.ops / d.ops:>19.3f} {p.seconds / d.seconds:>20.3f}")
    return EXIT_OK


def cmd_catalog(args) -> int:
    for f in CATALOG.values():
        print(f"{f.name:<12} {f.defining_operator.to_str()}")
        print(f"{'':<12} {f.description}; coefficients by {f.coeff_source.replace('_', ' ')}")
        if f.verify_operator is not None:
            print(f"{'':<12} verified with {f.verify_operator.to_str()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orecheb",
        description="Recurrences for Chebyshev coefficients of solutions of linear ODEs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rec", help="compute the recurrence for an operator")
    p.add_argument("--op", required=True, help='operator, e.g. "(x^2+1)*Dx^2 + 2*x*Dx"')
    p.add_argument("--algo", choices=ALGO_NAMES, default="paszkowski")
    p.add_argument("--reduce", action="store_true", help="remove the spurious left factor shared with I^k")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--centered", action="store_true", help="print with symmetric indices c[n-j]..c[n+j]")
    p.set_defaults(func=cmd_rec)

    p = sub.add_parser("verify", help="check a catalog function's coefficients against the recurrence")
    p.add_argument("--function", required=True, help="name from `orecheb catalog`")
    p.add_argument("--algo", choices=ALGO_NAMES, default="paszkowski")
    p.add_argument("--N", type=int, default=64)
    p.add_argument("--tol", type=float, default=None, help="default depends on the function (1e-8 for most)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the algorithms on random operators")
    p.add_argument("--dmax", type=int, default=2)
    p.add_argument("--kmax", type=int, default=16)
    p.add_argument("--seed", type=int, default=0, help="overridden by ORECHEB_SEED")
    p.add_argument("--lewanowicz-kmax", type=int, default=8)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("catalog", help="list built-in functions")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e.render()}", file=sys.stderr)
        return EXIT_PARSE
    except SeriesError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (InternalConsistencyError, OreError, ArithmeticError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
