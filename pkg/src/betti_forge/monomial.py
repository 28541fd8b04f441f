"""Equigenerated monomial ideals, strong stability and the passage from a
strongly stable ideal to a Ferrers hypergraph with the same Betti numbers.

A monomial is stored by its factors: ``x1 * x2^2`` is ``(1, 2, 2)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .combinatorics import binomial
from .diagrams import BettiTable
from .errors import BettiForgeError
from .ferrers import FerrersHypergraph, from_cells


@dataclass(frozen=True, order=True)
class Monomial:
    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(sorted(int(v) for v in self.factors))
        if factors and factors[0] < 1:
            raise BettiForgeError(f"variable indices start at 1, got {factors[0]}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def from_exponents(cls, exponents) -> Monomial:
        """Dense exponent vector, ``exponents[0]`` belonging to ``x1``."""
        factors = []
        for idx, e in enumerate(exponents, start=1):
            if e < 0:
                raise BettiForgeError(f"negative exponent {e}")
            factors.extend([idx] * int(e))
        return cls(tuple(factors))

    @property
    def exponents(self) -> dict[int, int]:
        return dict(Counter(self.factors))

    def dense(self, n: int) -> list[int]:
        out = [0] * n
        for v in self.factors:
            out[v - 1] += 1
        return out

    @property
    def degree(self) -> int:
        return len(self.factors)

    @property
    def max_index(self) -> int:
        return self.factors[-1] if self.factors else 0

    def is_squarefree(self) -> bool:
        return len(set(self.factors)) == len(self.factors)

    def exchange(self, i: int, j: int) -> Monomial:
        """``x_j * u / x_i``; ``x_i`` must divide ``u``."""
        factors = list(self.factors)
        factors.remove(i)
        factors.append(j)
        return Monomial(tuple(factors))

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for v, e in sorted(self.exponents.items()):
            parts.append(f"x{v}" if e == 1 else f"x{v}^{e}")
        return "*".join(parts)


@dataclass(frozen=True)
class MonomialIdeal:
    generators: frozenset[Monomial]

    def __post_init__(self):
        gens = frozenset(g if isinstance(g, Monomial) else Monomial(tuple(g)) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        degrees = {g.degree for g in gens}
        if len(degrees) > 1:
            raise BettiForgeError(f"generators must share one degree, got {sorted(degrees)}")
        # distinct monomials of equal degree never divide one another

    @classmethod
    def from_exponent_vectors(cls, vectors) -> MonomialIdeal:
        return cls(frozenset(Monomial.from_exponents(v) for v in vectors))

    @property
    def degree(self) -> int:
        return next(iter(self.generators)).degree if self.generators else 0

    @property
    def n(self) -> int:
        return max((g.max_index for g in self.generators), default=0)

    def __contains__(self, u: Monomial) -> bool:
        # membership of a degree-d monomial in an ideal generated in degree d
        return u in self.generators

    def __iter__(self):
        return iter(sorted(self.generators))

    def __len__(self):
        return len(self.generators)


def is_strongly_stable(I: MonomialIdeal) -> bool:
    for u in I.generators:
        for i in set(u.factors):
            for j in range(1, i):
                if u.exchange(i, j) not in I:
                    return False
    return True


def is_stable(I: MonomialIdeal) -> bool:
    """Exchange condition only for the largest variable of each generator."""
    for u in I.generators:
        m = u.max_index
        for j in range(1, m):
            if u.exchange(m, j) not in I:
                return False
    return True


def is_squarefree_strongly_stable(I: MonomialIdeal) -> bool:
    for u in I.generators:
        if not u.is_squarefree():
            raise BettiForgeError(f"generator {u} is not squarefree")
    for u in I.generators:
        present = set(u.factors)
        for i in present:
            for j in range(1, i):
                if j not in present and u.exchange(i, j) not in I:
                    return False
    return True


def phi(u: Monomial) -> Monomial:
    """``x_{i_1} x_{i_2} ... x_{i_j}  ->  x_{i_1} x_{i_2 + 1} ... x_{i_j + j - 1}``."""
    return Monomial(tuple(v + k for k, v in enumerate(u.factors)))


def psi(v: Monomial) -> tuple[int, ...]:
    """``x_{i_1} ... x_{i_d}`` with ``i_1 < ... < i_d`` to the Ferrers cell
    ``(i_1, i_2 - i_1, ..., i_d - i_{d-1})``."""
    if not v.is_squarefree():
        raise BettiForgeError(f"{v} is not squarefree")
    f = v.factors
    return (f[0],) + tuple(b - a for a, b in zip(f, f[1:])) if f else ()


def strongly_stable_to_ferrers(I: MonomialIdeal) -> FerrersHypergraph:
    if not I.generators:
        raise BettiForgeError("the ideal has no generators")
    if not is_strongly_stable(I):
        raise BettiForgeError("the ideal is not strongly stable")
    # an order-ideal failure here would be a bug, so let it propagate
    return from_cells(I.degree, (psi(phi(u)) for u in I.generators))


def ek_betti(I: MonomialIdeal) -> BettiTable:
    """Eliahou-Kervaire numbers of a stable ideal generated in degree ``d``:
    ``beta_{i, d+i} = sum_u C(max(u) - 1, i)``."""
    if not I.generators:
        raise BettiForgeError("the ideal has no generators")
    if not is_stable(I):
        raise BettiForgeError("the ideal is not stable")
    d = I.degree
    top = max(u.max_index for u in I.generators) - 1
    return BettiTable({
        (i, d + i): sum(binomial(u.max_index - 1, i) for u in I.generators)
        for i in range(top + 1)
    })


def squarefree_ek_betti(J: MonomialIdeal) -> BettiTable:
    """Squarefree analogue for squarefree strongly stable ``J`` in degree ``d``:
    ``beta_{i, d+i} = sum_v C(max(v) - d, i)``."""
    if not J.generators:
        raise BettiForgeError("the ideal has no generators")
    if not is_squarefree_strongly_stable(J):
        raise BettiForgeError("the ideal is not squarefree strongly stable")
    d = J.degree
    top = max(v.max_index for v in J.generators) - d
    return BettiTable({
        (i, d + i): sum(binomial(v.max_index - d, i) for v in J.generators)
        for i in range(top + 1)
    })


def phi_ideal(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(frozenset(phi(u) for u in I.generators))
