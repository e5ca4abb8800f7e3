"""Exact rank of rational matrices via fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def clear_denominators(row: Sequence[Fraction | int]) -> list[int]:
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return [int(x * den) for x in row]


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix.

    Every intermediate entry is a minor of the input, so each division by the
    previous pivot is exact.
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank, prev = 0, 1
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        p = prow[c]
        for i in range(rank + 1, len(m)):
            row = m[i]
            a = row[c]
            if a:
                m[i] = row[:c] + [(p * x - a * y) // prev for x, y in zip(row[c:], prow[c:])]
            elif p != prev:
                m[i] = row[:c] + [p * x // prev for x in row[c:]]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def rational_rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    return bareiss_rank([clear_denominators(r) for r in rows])
