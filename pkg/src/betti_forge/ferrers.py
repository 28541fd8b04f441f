"""Ferrers hypergraphs and the Betti tables of their ideals and quotients.

A ``d``-uniform Ferrers hypergraph is stored as a finite order ideal of
``d``-tuples of positive integers (1-based, componentwise order).  Cell
``(i_1, ..., i_d)`` stands for the monomial ``x^(1)_{i_1} ... x^(d)_{i_d}``.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binomial, lex_order_ideal
from .decompose import Decomposition
from .diagrams import BettiTable
from .errors import BettiForgeError, NotOrderIdealError

Cell = tuple[int, ...]


@dataclass(frozen=True)
class FerrersHypergraph:
    d: int
    cells: frozenset[Cell]

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))

    def degree_sum(self, cell: Cell) -> int:
        """``k`` with ``sum(cell) = k + d``."""
        return sum(cell) - self.d


@dataclass(frozen=True)
class QuotientSummandData:
    axis: int  # 1-based
    S: Cell  # the cell with coordinate ``axis`` removed
    n_S: int
    k_S: int


def from_cells(d: int, cells) -> FerrersHypergraph:
    if d < 1:
        raise BettiForgeError(f"uniformity must be positive, got {d}")
    cells = frozenset(tuple(int(x) for x in c) for c in cells)
    for cell in cells:
        if len(cell) != d:
            raise BettiForgeError(f"cell {cell} does not have {d} coordinates")
        if min(cell) < 1:
            raise BettiForgeError(f"cell {cell} has a coordinate below 1")
    # checking immediate predecessors suffices by induction on the coordinate sum
    for cell in sorted(cells):
        for p in range(d):
            if cell[p] > 1:
                below = cell[:p] + (cell[p] - 1,) + cell[p + 1:]
                if below not in cells:
                    raise NotOrderIdealError(
                        f"cell {cell} is present but {below} is missing",
                        witness=cell,
                        missing=below,
                    )
    return FerrersHypergraph(d, cells)


def downward_closure(d: int, generators) -> FerrersHypergraph:
    """Smallest Ferrers hypergraph containing the given cells."""
    seen = set()
    stack = [tuple(g) for g in generators]
    while stack:
        cell = stack.pop()
        if cell in seen:
            continue
        seen.add(cell)
        for p in range(d):
            if cell[p] > 1:
                stack.append(cell[:p] + (cell[p] - 1,) + cell[p + 1:])
    return from_cells(d, seen)


def alpha_sequence(F: FerrersHypergraph) -> tuple[int, ...]:
    """``alpha_k`` = number of cells with coordinate sum ``k + d``."""
    if not F.cells:
        return ()
    counts = defaultdict(int)
    for cell in F.cells:
        counts[F.degree_sum(cell)] += 1
    alpha = [counts[k] for k in range(max(counts) + 1)]
    while alpha and alpha[-1] == 0:
        alpha.pop()
    return tuple(alpha)


def _require_nonempty(F):
    if not F.cells:
        raise BettiForgeError("the hypergraph has no cells")


def _require_d2(F):
    _require_nonempty(F)
    if F.d < 2:
        raise BettiForgeError("quotient formulas need d >= 2; for d = 1 the decomposition has one summand")


def ideal_betti(F: FerrersHypergraph) -> BettiTable:
    """Linear strand ``beta_{i, d+i} = sum_k alpha_k C(k, i)``."""
    _require_nonempty(F)
    alpha = alpha_sequence(F)
    return BettiTable({
        (i, F.d + i): sum(a * binomial(k, i) for k, a in enumerate(alpha))
        for i in range(len(alpha))
    })


def ideal_decomposition(F: FerrersHypergraph) -> Decomposition:
    _require_nonempty(F)
    alpha = alpha_sequence(F)
    terms = [
        (a * math.factorial(k), tuple(range(F.d, F.d + k + 1)))
        for k, a in reversed(list(enumerate(alpha)))
        if a
    ]
    return Decomposition(tuple(terms))


def quotient_betti(F: FerrersHypergraph) -> BettiTable:
    """``beta_0 = 1`` and ``beta_{i, d+i-1} = sum_cells C(sum - d, i - 1)``."""
    _require_nonempty(F)
    top = max(F.degree_sum(c) for c in F.cells) + 1
    entries = {(0, 0): 1}
    for i in range(1, top + 1):
        entries[i, F.d + i - 1] = sum(binomial(F.degree_sum(c), i - 1) for c in F.cells)
    return BettiTable(entries)


def quotient_summands(F: FerrersHypergraph) -> list[QuotientSummandData]:
    """For each axis ``j`` and each projection ``S`` of a cell along ``j``:
    ``n_S`` (largest coordinate on axis ``j`` above ``S``) and
    ``k_S = n_S - d + sum(S)``."""
    _require_d2(F)
    out = []
    for axis in range(F.d):
        tops = {}
        for cell in F.cells:
            S = cell[:axis] + cell[axis + 1:]
            if cell[axis] > tops.get(S, 0):
                tops[S] = cell[axis]
        for S in sorted(tops):
            n = tops[S]
            out.append(QuotientSummandData(axis + 1, S, n, n - F.d + sum(S)))
    return out


def quotient_decomposition(F: FerrersHypergraph) -> Decomposition:
    """Summands with equal ``k_S`` share the diagram ``(0, d, ..., d + k_S)``
    and are merged into one term with coefficient ``k! * sum n_S``."""
    by_k = defaultdict(int)
    for item in quotient_summands(F):
        by_k[item.k_S] += item.n_S
    terms = [
        (math.factorial(k) * by_k[k], (0,) + tuple(range(F.d, F.d + k + 1)))
        for k in sorted(by_k, reverse=True)
    ]
    return Decomposition(tuple(terms))


def ferrers_identity(F: FerrersHypergraph) -> Fraction:
    """``sum_j sum_S n_S / C(d + k_S, d)``; always equals ``d``."""
    return sum(
        (Fraction(item.n_S, binomial(F.d + item.k_S, F.d)) for item in quotient_summands(F)),
        Fraction(0),
    )


def pair_count_identity(F: FerrersHypergraph, i: int) -> tuple[int, int]:
    """Both sides of the double count behind the quotient decomposition in
    homological degree ``i >= 1``:

    ``(d + i - 1) * sum_cells C(sum - d, i - 1)`` and
    ``sum_j sum_S n_S * C(k_S, i - 1)``.
    """
    if i < 1:
        raise ValueError("homological degree must be at least 1")
    lhs = (F.d + i - 1) * sum(binomial(F.degree_sum(c), i - 1) for c in F.cells)
    rhs = sum(item.n_S * binomial(item.k_S, i - 1) for item in quotient_summands(F))
    return lhs, rhs


def ferrers_from_o_sequence(h, d: int) -> FerrersHypergraph:
    """Hypergraph with ``alpha``-sequence ``h``: shift every exponent vector
    of the lex order ideal by one."""
    ideal = lex_order_ideal(h, d)
    return from_cells(d, (tuple(a + 1 for a in exps) for exps in ideal))
