"""Binomials, Macaulay representations and O-sequences."""

from __future__ import annotations

import math
from itertools import islice

from .errors import InvalidOSequenceError


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    if k < 0 or n < k or n < 0:
        return 0
    return math.comb(n, k)


def macaulay_expansion(b: int, d: int) -> list[int]:
    """The ``d``-th Macaulay representation of ``b``.

    Returns ``[m_d, m_{d-1}, ..., m_s]`` with ``b = sum C(m_k, k)`` where ``k``
    runs from ``d`` down to ``s``, ``m_d > m_{d-1} > ... > m_s >= s >= 1``.
    """
    if b < 1 or d < 1:
        raise ValueError("macaulay_expansion needs b >= 1 and d >= 1")
    out = []
    k = d
    while b > 0:
        # largest m with C(m, k) <= b; C(k, k) = 1 <= b so m >= k
        lo, hi = k, k
        while math.comb(hi, k) <= b:
            lo, hi = hi, 2 * hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if math.comb(mid, k) <= b:
                lo = mid
            else:
                hi = mid
        out.append(lo)
        b -= math.comb(lo, k)
        k -= 1
    return out


def macaulay_growth(b: int, d: int) -> int:
    """Macaulay's upper bound ``b^<d>`` for the next value of a Hilbert function."""
    if b < 0 or d < 1:
        raise ValueError("macaulay_growth needs b >= 0 and d >= 1")
    if b == 0:
        return 0
    expansion = macaulay_expansion(b, d)
    return sum(math.comb(m + 1, k + 1) for k, m in zip(range(d, 0, -1), expansion))


def is_o_sequence(h) -> bool:
    h = list(h)
    if not h or h[0] != 1 or any(v < 0 for v in h):
        return False
    return all(h[j + 1] <= macaulay_growth(h[j], j) for j in range(1, len(h) - 1))


def _trim(h):
    h = list(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return h


def iter_monomials(j: int, d: int):
    """Yield exponent vectors of degree ``j`` in ``d`` variables, lex-ascending.

    With ``x_1 > x_2 > ... > x_d`` the lex order on monomials of one degree is
    the tuple order on exponent vectors.
    """
    if d == 1:
        yield (j,)
        return
    for first in range(j + 1):
        for rest in iter_monomials(j - first, d - 1):
            yield (first,) + rest


def monomials_of_degree(j: int, d: int) -> list[tuple[int, ...]]:
    return list(iter_monomials(j, d))


def lex_order_ideal(h, d: int) -> frozenset[tuple[int, ...]]:
    """Order ideal of monomials in ``d`` variables with ``h_j`` elements of
    degree ``j``: in each degree the ``h_j`` lex-smallest monomials, i.e. the
    complement of the lexsegment ideal with Hilbert function ``h``."""
    h = _trim(h)
    if not is_o_sequence(h):
        raise InvalidOSequenceError(f"{tuple(h)} is not an O-sequence")
    if len(h) > 1 and h[1] > d:
        raise InvalidOSequenceError(f"h_1 = {h[1]} exceeds the number of variables {d}")
    if d < 1:
        raise InvalidOSequenceError("need at least one variable")
    chosen = set()
    for j, hj in enumerate(h):
        chosen.update(islice(iter_monomials(j, d), hj))
    return frozenset(chosen)
