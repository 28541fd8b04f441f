"""Reading and writing tables, decompositions, hypergraphs and ideals.

Text grids follow the Macaulay2 layout: a header of homological degrees and
one row per ``r = j - i``; the cell in row ``r``, column ``i`` is
``beta_{i, i + r}``::

           0 1 2 3
        0: 1 . . .
        1: . . . .
        2: . 6 7 2
"""

from __future__ import annotations

import json
from fractions import Fraction

from .decompose import Decomposition
from .diagrams import BettiTable
from .errors import ParseError
from .ferrers import FerrersHypergraph, from_cells
from .gorenstein import GorensteinParams
from .monomial import MonomialIdeal

ZERO_MARKS = {".", "·", "-"}


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(token: str) -> Fraction:
    try:
        num, _, den = token.partition("/")
        value = Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot read {token!r} as a rational") from None
    if value < 0:
        raise ParseError(f"negative entry {token!r}")
    return value


def render_table(t: BettiTable) -> str:
    if not t:
        return ""
    cols = max(i for i, _ in t) + 1
    rows = [j - i for i, j in t]
    lo, hi = min(rows), max(rows)
    cells = {
        r: [format_rational(t[i, i + r]) if (i, i + r) in t else "." for i in range(cols)]
        for r in range(lo, hi + 1)
    }
    widths = [
        max(len(str(i)), *(len(cells[r][i]) for r in cells)) for i in range(cols)
    ]
    label = max(len(f"{r}:") for r in cells)
    lines = [" " * label + "".join(" " + str(i).rjust(w) for i, w in enumerate(widths))]
    for r in range(lo, hi + 1):
        body = "".join(" " + v.rjust(w) for v, w in zip(cells[r], widths))
        lines.append(f"{r}:".rjust(label) + body)
    return "\n".join(lines) + "\n"


def parse_table_text(text: str) -> BettiTable:
    header = None
    entries = {}
    seen_rows = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        if tokens[0].endswith(":"):
            label = tokens[0][:-1]
            if label == "total":
                continue
            try:
                r = int(label)
            except ValueError:
                raise ParseError(f"line {lineno}: bad row label {tokens[0]!r}") from None
            if r in seen_rows:
                raise ParseError(f"line {lineno}: row {r} appears twice")
            seen_rows.add(r)
            values = tokens[1:]
            if header is not None and len(values) > len(header):
                raise ParseError(f"line {lineno}: {len(values)} cells but {len(header)} columns")
            for i, token in enumerate(values):
                if token in ZERO_MARKS:
                    continue
                value = parse_rational(token)
                if value:
                    entries[i, i + r] = value
        else:
            if header is not None or seen_rows:
                raise ParseError(f"line {lineno}: unexpected header line")
            try:
                header = [int(tok) for tok in tokens]
            except ValueError:
                raise ParseError(f"line {lineno}: header must list homological degrees") from None
            if header != list(range(len(header))):
                raise ParseError(f"line {lineno}: header must read 0 1 2 ...")
    return BettiTable(entries)


def table_to_json(t: BettiTable) -> dict:
    return {"entries": [[i, j, format_rational(v)] for (i, j), v in t.items()]}


def table_from_json(data) -> BettiTable:
    try:
        rows = data["entries"]
        entries = {}
        for i, j, v in rows:
            if (int(i), int(j)) in entries:
                raise ParseError(f"duplicate entry ({i}, {j})")
            entries[int(i), int(j)] = parse_rational(str(v))
        return BettiTable(entries)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed table JSON: {exc}") from None


def decomposition_to_json(d: Decomposition) -> dict:
    return {
        "terms": [
            {"coeff": format_rational(c), "sequence": list(s.degrees)} for c, s in d.terms
        ]
    }


def decomposition_from_json(data) -> Decomposition:
    try:
        return Decomposition(tuple(
            (parse_rational(str(term["coeff"])), tuple(term["sequence"])) for term in data["terms"]
        ))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed decomposition JSON: {exc}") from None


def hypergraph_to_json(F: FerrersHypergraph) -> dict:
    return {"d": F.d, "cells": [list(c) for c in sorted(F.cells)]}


def hypergraph_from_json(data) -> FerrersHypergraph:
    try:
        d, cells = int(data["d"]), data["cells"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed hypergraph JSON: {exc}") from None
    return from_cells(d, cells)


def ideal_to_json(I: MonomialIdeal) -> dict:
    n = I.n
    return {"n": n, "generators": sorted((list(g.dense(n)) for g in I.generators), reverse=True)}


def ideal_from_json(data) -> MonomialIdeal:
    try:
        n, gens = int(data["n"]), data["generators"]
        if any(len(g) != n for g in gens):
            raise ParseError(f"every exponent vector must have length n = {n}")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed ideal JSON: {exc}") from None
    return MonomialIdeal.from_exponent_vectors(gens)


def params_from_json(data) -> GorensteinParams:
    try:
        s, t, c = int(data["s"]), int(data["t"]), int(data["c"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed parameter JSON: {exc}") from None
    return GorensteinParams(s, t, c)


def load_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None


def load_table(path) -> BettiTable:
    """Read a table from a JSON file or a text grid, by content."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        try:
            return table_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON ({exc})") from None
    return parse_table_text(text)
