"""Gorenstein rings whose resolution has two linear strands.

Parameters ``(s, t, c)``: socle degree ``s``, first strand starting in degree
``t + 1``, codimension ``c``.  Stacked polytopes are the case ``t = 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binomial
from .decompose import Decomposition
from .diagrams import BettiTable, DegreeSequence
from .errors import InvalidParametersError


@dataclass(frozen=True)
class GorensteinParams:
    s: int
    t: int
    c: int

    def __post_init__(self):
        s, t, c = self.s, self.t, self.c
        if s < 1 or t < 1:
            raise InvalidParametersError(f"s and t must be positive, got s={s}, t={t}")
        if s < 2 * t:
            raise InvalidParametersError(f"need s >= 2t, got s={s}, t={t}")
        if c < 2:
            raise InvalidParametersError(f"need codimension c >= 2, got c={c}")

    @property
    def shift(self) -> int:
        return self.s + self.c


def strand_rank(p: GorensteinParams, i: int) -> int:
    """``a_i = C(c + t - 1, i + t) * C(t - 1 + i, t)``."""
    return binomial(p.c + p.t - 1, i + p.t) * binomial(p.t - 1 + i, p.t)


def gorenstein_betti(p: GorensteinParams) -> BettiTable:
    s, t, c = p.s, p.t, p.c
    entries = [((0, 0), 1), ((c, s + c), 1)]
    for i in range(1, c):
        entries.append(((i, t + i), strand_rank(p, i)))
        entries.append(((i, s - t + i), strand_rank(p, c - i)))
    # BettiTable sums repeated positions, which happens when s = 2t
    return BettiTable(entries)


def gorenstein_h_vector(p: GorensteinParams) -> list[int]:
    s, t, c = p.s, p.t, p.c
    h = []
    for i in range(s + 1):
        if i <= t:
            h.append(binomial(c - 1 + i, c - 1))
        elif i <= s - t:
            h.append(binomial(c - 1 + t, c - 1))
        else:
            h.append(binomial(s - i + c - 1, c - 1))
    return h


def summand_sequence(p: GorensteinParams, j: int) -> DegreeSequence:
    """``sigma_j = (0, d_{j,1}, ..., d_{j,c-1}, s + c)`` for ``1 <= j <= c``."""
    s, t, c = p.s, p.t, p.c
    inner = [t + k if k <= c - j else s - t + k for k in range(1, c)]
    return DegreeSequence((0, *inner, s + c))


def gorenstein_summands(p: GorensteinParams) -> list[tuple[Fraction, DegreeSequence]]:
    """The ``c`` closed-form summands, before merging coincident diagrams."""
    scale = Fraction(math.factorial(p.t + p.c - 1), math.factorial(p.t))
    a = (p.s + 1 - p.t) * scale
    b = (p.s + 1 - 2 * p.t) * scale
    return [
        (a if j in (1, p.c) else b, summand_sequence(p, j))
        for j in range(1, p.c + 1)
    ]


def gorenstein_decomposition(p: GorensteinParams) -> Decomposition:
    """Closed-form decomposition; for ``s = 2t`` all summands are the same
    diagram and are merged into a single term."""
    merged: list[list] = []
    for coeff, sigma in gorenstein_summands(p):
        if merged and merged[-1][1] == sigma:
            merged[-1][0] += coeff
        else:
            merged.append([coeff, sigma])
    return Decomposition(tuple((c, sigma) for c, sigma in merged))


def stacked_decomposition(c: int, d: int) -> Decomposition:
    """Boundary complex of a stacked ``d``-polytope built from ``c`` simplices."""
    if c < 2 or d < 2:
        raise InvalidParametersError(f"need c >= 2 and d >= 2, got c={c}, d={d}")
    return gorenstein_decomposition(GorensteinParams(s=d, t=1, c=c))


def telescoping_identity(a: int, b: int, m: int) -> tuple[Fraction, Fraction]:
    """Both sides of
    ``sum_{j=1}^m C(a,j)/C(a+b,j) = a/(b+1) - (a+b-m) C(a,m+1) / ((b+1) C(a+b,m+1))``.

    The right side is ``mu(m+1) - mu(1)`` for
    ``mu(j) = -(a+b-j+1) C(a,j) / ((b+1) C(a+b,j))``, whose successive
    differences are the summands.  Writing the factor as ``a+b+1-m`` is only
    correct when ``m = a``, where the binomial ``C(a, m+1)`` vanishes anyway.
    """
    if not (1 <= m <= a) or b < 1:
        raise InvalidParametersError(f"need 1 <= m <= a and b >= 1, got a={a}, b={b}, m={m}")
    lhs = sum((Fraction(binomial(a, j), binomial(a + b, j)) for j in range(1, m + 1)), Fraction(0))
    rhs = _mu(a, b, m + 1) - _mu(a, b, 1)
    return lhs, rhs


def _mu(a: int, b: int, j: int) -> Fraction:
    return -Fraction((a + b - j + 1) * binomial(a, j), (b + 1) * binomial(a + b, j))
