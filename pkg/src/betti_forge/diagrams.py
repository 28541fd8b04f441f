"""Betti tables, degree sequences and pure diagrams.

All arithmetic is exact (:class:`fractions.Fraction`). A table is a sparse
mapping ``(i, j) -> value`` with ``i`` the homological and ``j`` the
internal degree; zero entries are never stored.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import BettiForgeError, InvalidSequenceError


class BettiTable(Mapping):
    """Immutable sparse table of nonnegative exact rationals."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        data = {}
        for (i, j), value in items:
            i, j = int(i), int(j)
            if i < 0:
                raise ValueError(f"negative homological degree {i}")
            value = Fraction(value)
            if value < 0:
                raise ValueError(f"negative entry {value} at ({i}, {j})")
            if value:
                data[i, j] = data.get((i, j), 0) + value
        self._entries = dict(sorted(data.items()))
        self._hash = None

    # Mapping protocol; missing positions read as zero through .get()
    def __getitem__(self, key):
        return self._entries[key]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, BettiTable):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"({i}, {j}): {v}" for (i, j), v in self._entries.items())
        return f"BettiTable({{{body}}})"

    def __add__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return table_add(self, other)

    def __rmul__(self, scalar):
        return table_scale(scalar, self)

    def entry(self, i: int, j: int) -> Fraction:
        return self._entries.get((i, j), Fraction(0))

    @property
    def homological_degrees(self) -> list[int]:
        return sorted({i for i, _ in self._entries})

    def is_gap_free(self) -> bool:
        """True iff the occupied homological degrees are exactly 0..projdim."""
        degrees = self.homological_degrees
        return bool(degrees) and degrees == list(range(len(degrees)))

    def strand(self, i: int) -> dict[int, Fraction]:
        return {j: v for (k, j), v in self._entries.items() if k == i}

    def total_betti(self) -> list[Fraction]:
        """Column sums ``beta_i = sum_j beta_{i,j}`` for i = 0..projdim."""
        if not self._entries:
            return []
        top = max(i for i, _ in self._entries)
        totals = [Fraction(0)] * (top + 1)
        for (i, _), v in self._entries.items():
            totals[i] += v
        return totals

    def euler_sum(self) -> Fraction:
        return sum((-1) ** i * b for i, b in enumerate(self.total_betti()))


@dataclass(frozen=True)
class DegreeSequence:
    """Strictly increasing, nonempty tuple of integers ``(d_0, ..., d_s)``."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        if not degrees:
            raise InvalidSequenceError("degree sequence must be nonempty")
        if any(a >= b for a, b in zip(degrees, degrees[1:])):
            raise InvalidSequenceError(f"degree sequence {degrees} is not strictly increasing")

    def __len__(self):
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, k):
        return self.degrees[k]

    def __str__(self):
        return "(" + ",".join(map(str, self.degrees)) + ")"

    @property
    def length(self) -> int:
        """The index ``s`` of the last entry (projective dimension of the diagram)."""
        return len(self.degrees) - 1

    def dual(self) -> DegreeSequence:
        return dual_sequence(self)

    def shift(self, m: int) -> DegreeSequence:
        return shift_sequence(m, self)


def as_sequence(sigma) -> DegreeSequence:
    if isinstance(sigma, DegreeSequence):
        return sigma
    if isinstance(sigma, int):
        sigma = (sigma,)
    return DegreeSequence(tuple(sigma))


@dataclass(frozen=True)
class PureDiagram:
    sequence: DegreeSequence
    table: BettiTable

    def value(self, i: int) -> Fraction:
        """The unique nonzero entry in homological degree ``i``."""
        return self.table.entry(i, self.sequence[i])


def pure_entry(sigma: DegreeSequence, i: int) -> Fraction:
    d = sigma.degrees
    denom = 1
    for k, dk in enumerate(d):
        if k != i:
            denom *= abs(d[i] - dk)
    return Fraction(1, denom)


def pure_diagram(sigma) -> PureDiagram:
    sigma = as_sequence(sigma)
    table = BettiTable({(i, di): pure_entry(sigma, i) for i, di in enumerate(sigma.degrees)})
    return PureDiagram(sigma, table)


def sequence_leq(sigma, tau) -> bool:
    """Partial order on degree sequences: ``sigma`` is at least as long as
    ``tau`` and smaller or equal in every position ``tau`` has."""
    sigma, tau = as_sequence(sigma), as_sequence(tau)
    if len(sigma) < len(tau):
        return False
    return all(a <= b for a, b in zip(sigma.degrees, tau.degrees))


def sequence_lt(sigma, tau) -> bool:
    return sequence_leq(sigma, tau) and as_sequence(sigma) != as_sequence(tau)


def dual_sequence(sigma) -> DegreeSequence:
    sigma = as_sequence(sigma)
    return DegreeSequence(tuple(-d for d in reversed(sigma.degrees)))


def shift_sequence(m: int, sigma) -> DegreeSequence:
    sigma = as_sequence(sigma)
    return DegreeSequence(tuple(m + d for d in sigma.degrees))


def table_add(a: BettiTable, b: BettiTable) -> BettiTable:
    out = dict(a.items())
    for key, v in b.items():
        out[key] = out.get(key, 0) + v
    return BettiTable(out)


def table_scale(c, a: BettiTable) -> BettiTable:
    c = Fraction(c)
    if c < 0:
        raise ValueError("scale factor must be nonnegative")
    return BettiTable({key: c * v for key, v in a.items()})


class TableStats(NamedTuple):
    projdim: int
    regularity: int
    initial_degree: int
    duality_shift: int


def table_stats(t: BettiTable) -> TableStats:
    """Projective dimension, regularity, initial degree and the shift
    ``m = reg + projdim + a`` pairing the table with its dual.

    The shift is meaningful for Cohen-Macaulay inputs, where the codimension
    equals the projective dimension.
    """
    if not t:
        raise BettiForgeError("statistics of the zero table are undefined")
    if not t.is_gap_free():
        raise BettiForgeError(
            f"homological degrees {t.homological_degrees} are not 0..projdim"
        )
    projdim = max(i for i, _ in t)
    regularity = max(j - i for i, j in t)
    initial = min(j for i, j in t if i == 0)
    return TableStats(projdim, regularity, initial, regularity + projdim + initial)
