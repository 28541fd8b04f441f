"""Boij-Soderberg decomposition by greedy elimination.

The greedy step reads the minimal shifts of the residual table, peels off the
largest multiple of that pure diagram which keeps every entry nonnegative and
repeats.  Each step zeroes at least one entry, so the loop ends after at most
``len(table)`` iterations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagrams import (
    BettiTable,
    DegreeSequence,
    as_sequence,
    pure_diagram,
    sequence_lt,
    shift_sequence,
    table_add,
    table_scale,
)
from .errors import BettiForgeError, NotInConeError, NotSelfDualError


@dataclass(frozen=True)
class Decomposition:
    """Chain of pure diagrams with positive coefficients, smallest first."""

    terms: tuple[tuple[Fraction, DegreeSequence], ...]

    def __post_init__(self):
        terms = tuple((Fraction(c), as_sequence(s)) for c, s in self.terms)
        object.__setattr__(self, "terms", terms)
        for c, s in terms:
            if c <= 0:
                raise BettiForgeError(f"coefficient {c} on {s} is not positive")
        for (_, prev), (_, nxt) in zip(terms, terms[1:]):
            if not sequence_lt(prev, nxt):
                raise BettiForgeError(f"{prev} < {nxt} fails; terms do not form a chain")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def coefficients(self) -> list[Fraction]:
        return [c for c, _ in self.terms]

    @property
    def sequences(self) -> list[DegreeSequence]:
        return [s for _, s in self.terms]


@dataclass(frozen=True)
class SelfDualPairing:
    shift: int
    # 1-based (a, b) with a <= b
    pairs: tuple[tuple[int, int], ...]


def minimal_shifts(t: BettiTable) -> list[int]:
    top = max(i for i, _ in t)
    lows = {}
    for i, j in t:
        if i not in lows or j < lows[i]:
            lows[i] = j
    return [lows.get(i) for i in range(top + 1)]


def greedy_decompose(t: BettiTable) -> Decomposition:
    residual = dict(t.items())
    terms: list[tuple[Fraction, DegreeSequence]] = []

    def stuck(msg):
        return NotInConeError(msg, partial=terms, residual=BettiTable(residual))

    while residual:
        shifts = minimal_shifts(residual)
        if None in shifts:
            raise stuck(f"homological degree {shifts.index(None)} is empty below projdim {len(shifts) - 1}")
        if any(a >= b for a, b in zip(shifts, shifts[1:])):
            raise stuck(f"minimal shifts {tuple(shifts)} are not strictly increasing")
        sigma = DegreeSequence(tuple(shifts))
        if terms and not sequence_lt(terms[-1][1], sigma):
            raise stuck(f"next diagram {sigma} does not extend the chain after {terms[-1][1]}")
        pure = pure_diagram(sigma)
        coeff = min(residual[i, d] / pure.value(i) for i, d in enumerate(sigma))
        for i, d in enumerate(sigma):
            left = residual[i, d] - coeff * pure.value(i)
            if left < 0:
                raise stuck(f"subtraction leaves negative entry at ({i}, {d})")
            if left:
                residual[i, d] = left
            else:
                del residual[i, d]
        terms.append((coeff, sigma))
    return Decomposition(tuple(terms))


def recompose(d: Decomposition) -> BettiTable:
    total = BettiTable()
    for coeff, sigma in d.terms:
        total = table_add(total, table_scale(coeff, pure_diagram(sigma).table))
    return total


def check_integrality(d: Decomposition) -> bool:
    return all(c.denominator == 1 for c in d.coefficients)


def self_dual_pairing(d: Decomposition, m: int) -> SelfDualPairing:
    """Pair term ``i`` with term ``t + 1 - i`` and verify each pair is of the
    form ``sigma, m + sigma*`` with equal coefficients."""
    terms = d.terms
    t = len(terms)
    for k in range(t):
        c, sigma = terms[k]
        c_other, other = terms[t - 1 - k]
        image = shift_sequence(m, other.dual())
        if sigma != image:
            raise NotSelfDualError(
                f"term {k + 1} has sequence {sigma} but {m} + dual of term {t - k} is {image}"
            )
        if c != c_other:
            raise NotSelfDualError(
                f"coefficients {c} and {c_other} of paired terms {k + 1}, {t - k} differ"
            )
    pairs = tuple((k + 1, t - k) for k in range((t + 1) // 2))
    return SelfDualPairing(m, pairs)
