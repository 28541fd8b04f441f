"""Random Ferrers hypergraphs and strongly stable ideals for fuzzing."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement

from .ferrers import FerrersHypergraph, downward_closure
from .monomial import Monomial, MonomialIdeal


def random_ferrers(rng: random.Random, d: int, max_coord: int = 6, max_cells: int = 200) -> FerrersHypergraph:
    """Downward closure of a random antichain with coordinates in
    ``1..max_coord``, resampled until it has at most ``max_cells`` cells."""
    while True:
        count = rng.randint(1, 6)
        points = [tuple(rng.randint(1, max_coord) for _ in range(d)) for _ in range(count)]
        # keep the maximal points only
        antichain = [
            p for p in points
            if not any(q != p and all(a <= b for a, b in zip(p, q)) for q in points)
        ]
        F = downward_closure(d, antichain)
        if len(F) <= max_cells:
            return F
        max_coord = max(2, max_coord - 1)


def stable_closure(gens, n: int) -> set[Monomial]:
    """Close a set of equal-degree monomials under ``x_i -> x_j`` for ``j < i``."""
    out = set()
    stack = list(gens)
    while stack:
        u = stack.pop()
        if u in out:
            continue
        out.add(u)
        for i in set(u.factors):
            for j in range(1, i):
                stack.append(u.exchange(i, j))
    return out


def random_strongly_stable(rng: random.Random, n: int, d: int, max_gens: int = 100) -> MonomialIdeal:
    """Strongly stable ideal generated in degree ``d`` in ``n`` variables."""
    pool = [Monomial(f) for f in combinations_with_replacement(range(1, n + 1), d)]
    while True:
        seeds = rng.sample(pool, rng.randint(1, min(3, len(pool))))
        gens = stable_closure(seeds, n)
        if len(gens) <= max_gens:
            return MonomialIdeal(frozenset(gens))
