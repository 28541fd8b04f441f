"""Command line front end.

Exit status: 0 on success, 1 on a mathematical failure (not in the cone,
not an order ideal, not self-dual, bad parameters), 2 on I/O or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import checks, ferrers, gorenstein, monomial
from .combinatorics import is_o_sequence
from .decompose import (
    Decomposition,
    check_integrality,
    greedy_decompose,
    self_dual_pairing,
)
from .diagrams import table_stats
from .errors import BettiForgeError, NotInConeError, ParseError
from .formats import (
    decomposition_to_json,
    format_rational,
    hypergraph_from_json,
    hypergraph_to_json,
    ideal_from_json,
    load_json,
    load_table,
    params_from_json,
    render_table,
    table_to_json,
)

COLORS = {"green": "32", "red": "31", "yellow": "33", "bold": "1"}


def use_color(stream) -> bool:
    mode = os.environ.get("BETTI_FORGE_COLOR", "auto").lower()
    if mode == "always":
        return True
    if mode == "never":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


class Output:
    def __init__(self, stream, fmt):
        self.stream = stream
        self.fmt = fmt
        self.color = use_color(stream)

    def style(self, text, color):
        if not self.color:
            return text
        return f"\x1b[{COLORS[color]}m{text}\x1b[0m"

    def line(self, text=""):
        print(text, file=self.stream)

    def json(self, payload):
        print(json.dumps(payload, indent=2), file=self.stream)


def term_label(coeff, sigma) -> str:
    return f"{format_rational(coeff)} · π{sigma}"


def print_decomposition(out: Output, d: Decomposition, title="decomposition"):
    out.line(f"{title} ({len(d)} term{'s' if len(d) != 1 else ''}):")
    for coeff, sigma in d.terms:
        flag = "" if coeff.denominator == 1 else "  " + out.style("[non-integral]", "yellow")
        out.line(f"  {term_label(coeff, sigma)}{flag}")


def agreement(out: Output, closed: Decomposition, table) -> bool:
    greedy = greedy_decompose(table)
    same = greedy == closed
    verdict = out.style("agrees", "green") if same else out.style("DIFFERS", "red")
    out.line(f"greedy decomposition {verdict} with the closed form")
    return same


# -- subcommands -----------------------------------------------------------

def cmd_decompose(args, out: Output) -> int:
    table = load_table(args.table)
    d = greedy_decompose(table)
    integral = check_integrality(d)
    pairing = None
    if args.shift is not None or args.self_dual:
        m = args.shift if args.shift is not None else table_stats(table).duality_shift
        pairing = self_dual_pairing(d, m)
    if out.fmt == "json":
        payload = {"table": table_to_json(table), **decomposition_to_json(d), "integral": integral}
        if pairing:
            payload["self_dual"] = {"shift": pairing.shift, "pairs": [list(p) for p in pairing.pairs]}
        out.json(payload)
        return 0
    out.line(render_table(table).rstrip("\n"))
    print_decomposition(out, d)
    out.line("integral: " + ("yes" if integral else out.style("no", "yellow")))
    if pairing:
        shown = ", ".join(f"({a},{b})" for a, b in pairing.pairs)
        out.line(f"self-dual with shift {pairing.shift}: pairs {shown}")
    return 0


def cmd_ferrers(args, out: Output) -> int:
    F = hypergraph_from_json(load_json(args.hypergraph))
    mode = args.mode or "ideal"
    if mode == "alpha":
        alpha = list(ferrers.alpha_sequence(F))
        ok = is_o_sequence(alpha) and (len(alpha) < 2 or alpha[1] <= F.d)
        if out.fmt == "json":
            out.json({"alpha": alpha, "o_sequence": ok})
        else:
            out.line("alpha: " + " ".join(map(str, alpha)))
            out.line(f"O-sequence with alpha_1 <= {F.d}: {'yes' if ok else 'no'}")
        return 0
    if mode == "identity":
        value = ferrers.ferrers_identity(F)
        ok = value == F.d
        if out.fmt == "json":
            out.json({"d": F.d, "value": format_rational(value), "ok": ok})
        else:
            out.line(f"{format_rational(value)} = {F.d} " + (out.style("OK", "green") if ok else out.style("FAIL", "red")))
        return 0 if ok else 1
    if mode == "summands":
        items = ferrers.quotient_summands(F)
        if out.fmt == "json":
            out.json({"summands": [
                {"axis": q.axis, "S": list(q.S), "n_S": q.n_S, "k_S": q.k_S} for q in items
            ]})
        else:
            out.line("axis  S          n_S  k_S")
            for q in items:
                out.line(f"{q.axis:>4}  {str(q.S):<10} {q.n_S:>3}  {q.k_S:>3}")
        return 0
    if mode == "ideal":
        table, closed = ferrers.ideal_betti(F), ferrers.ideal_decomposition(F)
    else:
        table, closed = ferrers.quotient_betti(F), ferrers.quotient_decomposition(F)
    same = greedy_decompose(table) == closed
    if out.fmt == "json":
        out.json({"table": table_to_json(table), **decomposition_to_json(closed), "greedy_agrees": same})
        return 0 if same else 1
    out.line(render_table(table).rstrip("\n"))
    print_decomposition(out, closed)
    agreement(out, closed, table)
    return 0 if same else 1


def cmd_gorenstein(args, out: Output) -> int:
    if args.stacked:
        if args.c is None or args.d is None:
            raise BettiForgeError("--stacked needs --c and --d")
        closed = gorenstein.stacked_decomposition(args.c, args.d)
        p = gorenstein.GorensteinParams(s=args.d, t=1, c=args.c)
    else:
        if args.params:
            p = params_from_json(load_json(args.params))
        elif None in (args.s, args.t, args.c):
            raise BettiForgeError("give --s, --t and --c, or --params FILE")
        else:
            p = gorenstein.GorensteinParams(args.s, args.t, args.c)
        closed = gorenstein.gorenstein_decomposition(p)
    table = gorenstein.gorenstein_betti(p)
    h = gorenstein.gorenstein_h_vector(p)
    same = greedy_decompose(table) == closed
    pairing = self_dual_pairing(closed, p.shift)
    if out.fmt == "json":
        out.json({
            "params": {"s": p.s, "t": p.t, "c": p.c},
            "table": table_to_json(table),
            "h_vector": h,
            **decomposition_to_json(closed),
            "greedy_agrees": same,
            "self_dual": {"shift": pairing.shift, "pairs": [list(q) for q in pairing.pairs]},
        })
        return 0 if same else 1
    out.line(f"s={p.s} t={p.t} c={p.c}")
    out.line(render_table(table).rstrip("\n"))
    out.line("h-vector: " + " ".join(map(str, h)))
    print_decomposition(out, closed)
    agreement(out, closed, table)
    shown = ", ".join(f"({a},{b})" for a, b in pairing.pairs)
    out.line(f"self-dual with shift {pairing.shift}: pairs {shown}")
    return 0 if same else 1


def cmd_monomial(args, out: Output) -> int:
    I = ideal_from_json(load_json(args.ideal))
    if args.mode == "to-ferrers":
        F = monomial.strongly_stable_to_ferrers(I)
        if out.fmt == "json":
            out.json(hypergraph_to_json(F))
        else:
            for u in I:
                v = monomial.phi(u)
                out.line(f"{u}  ->  {v}  ->  {monomial.psi(v)}")
        return 0
    table = monomial.ek_betti(I)
    if out.fmt == "json":
        out.json({"table": table_to_json(table), "strongly_stable": monomial.is_strongly_stable(I)})
    else:
        out.line(render_table(table).rstrip("\n"))
    return 0


def cmd_check(args, out: Output) -> int:
    root = Path(args.fixtures) if args.fixtures else None
    if root is not None and root.is_file():
        root = root.parent
    results = checks.run_checks(root)
    failed = [r for r in results if not r.ok]
    if out.fmt == "json":
        out.json({"results": [r.__dict__ for r in results], "failed": len(failed)})
    else:
        for r in results:
            mark = out.style("PASS", "green") if r.ok else out.style("FAIL", "red")
            detail = f"  ({r.detail})" if r.detail and not r.ok else ""
            out.line(f"{mark}  {r.fixture}: {r.name}{detail}")
        out.line(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="betti-forge", description="Boij-Soderberg decompositions with exact arithmetic."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="decompose a Betti table")
    p.add_argument("table", help="text grid or JSON table")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--shift", type=int, help="verify self-duality with this shift")
    g.add_argument("--self-dual", action="store_true", help="verify self-duality with shift reg + pd + a")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("ferrers", parents=[common], help="Ferrers hypergraph computations")
    p.add_argument("hypergraph", help='JSON {"d": ..., "cells": [...]}')
    g = p.add_mutually_exclusive_group()
    for flag in ("ideal", "quotient", "identity", "alpha", "summands"):
        g.add_argument(f"--{flag}", dest="mode", action="store_const", const=flag)
    p.set_defaults(func=cmd_ferrers)

    p = sub.add_parser("gorenstein", parents=[common], help="two-strand Gorenstein family")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--params", help='JSON {"s": ..., "t": ..., "c": ...}')
    p.add_argument("--stacked", action="store_true", help="stacked polytope from --c simplices of dimension --d")
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_gorenstein)

    p = sub.add_parser("monomial", parents=[common], help="strongly stable ideals")
    p.add_argument("ideal", help='JSON {"n": ..., "generators": [...]}')
    g = p.add_mutually_exclusive_group()
    g.add_argument("--to-ferrers", dest="mode", action="store_const", const="to-ferrers")
    g.add_argument("--betti", dest="mode", action="store_const", const="betti")
    p.set_defaults(func=cmd_monomial)

    p = sub.add_parser("check", parents=[common], help="run the bundled worked examples")
    p.add_argument("fixtures", nargs="?", help="fixture directory or manifest (default: bundled)")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    out = Output(stdout, args.format)
    try:
        return args.func(args, out)
    except NotInConeError as exc:
        print(f"error: not in the cone: {exc} (after {len(exc.partial)} terms, "
              f"{len(exc.residual or ())} residual entries)", file=stderr)
        return 1
    except BettiForgeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
