"""Increasing even-odd index sequences.

An IEO sequence over ``{1, ..., N}`` is a strictly increasing tuple whose
j-th term (1-based) has the parity of j.  The empty tuple is included.
These sequences index the monomials of the rational-knot determinant
polynomials, see :mod:`ratknot.polynomials`.
"""

from __future__ import annotations

from typing import Sequence

IeoSequence = tuple[int, ...]


def is_ieo(terms: Sequence[int], n: int) -> bool:
    """Return True iff *terms* is an IEO sequence over ``{1, ..., n}``."""
    prev = 0
    for j, u in enumerate(terms, start=1):
        if isinstance(u, bool) or not isinstance(u, int):
            return False
        if u <= prev or u > n or u % 2 != j % 2:
            return False
        prev = u
    return True


def _extend(prefix: IeoSequence, n: int) -> list[IeoSequence]:
    out = [prefix]
    want = (len(prefix) + 1) % 2
    start = prefix[-1] + 1 if prefix else 1
    for u in range(start, n + 1):
        if u % 2 == want:
            out.extend(_extend(prefix + (u,), n))
    return out


def enumerate_ieo(n: int) -> list[IeoSequence]:
    """All IEO sequences over ``{1, ..., n}``, ordered by length then lexicographically.

    >>> enumerate_ieo(2)
    [(), (1,), (1, 2)]
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return sorted(_extend((), n), key=lambda u: (len(u), u))
