"""Independent brute-force references used by the test suite."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb


def colex_expansions(i: int, limit: int) -> list[tuple[tuple[int, int], ...]]:
    """Macaulay expansions of 0..limit-1 read off the combinatorial number system.

    The N-th i-subset {c_1 < ... < c_i} of the naturals in colex order satisfies
    N = sum C(c_j, j); dropping the zero terms C(c_j, j) with c_j < j leaves the
    Macaulay representation.
    """
    n = i
    while comb(n, i) < limit:
        n += 1
    subsets = sorted(combinations(range(n), i), key=lambda s: s[::-1])[:limit]
    out = []
    for s in subsets:
        parts = [(s[j - 1], j) for j in range(i, 0, -1)]
        out.append(tuple((t, b) for t, b in parts if t >= b))
    return out


def _monomials(n: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)  # lex-descending


def lex_growth(h: int, d: int) -> int:
    """Standard monomials in degree d+1 over the lex-last segment of size h in degree d.

    The segment lives in the last few variables, so any n with C(n+d-1, d) >= h works.
    """
    n = 1
    while comb(n + d - 1, d) < h:
        n += 1
    mons = _monomials(n, d)
    std = set(mons[len(mons) - h:]) if h else set()
    count = 0
    for m in _monomials(n, d + 1):
        divisors = [tuple(x - (j == i) for j, x in enumerate(m)) for i in range(n) if m[i]]
        if all(dv in std for dv in divisors):
            count += 1
    return count


def fraction_rank(rows) -> int:
    """Plain Gauss-Jordan rank over the rationals."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def lex_section(h: int, d: int) -> int:
    """Monomials of the lex-last segment of size h in degree d free of the last variable.

    This is the degree-d Hilbert function of the lex quotient cut by that variable.
    """
    n = 2
    while comb(n + d - 1, d) < h:
        n += 1
    mons = _monomials(n, d)
    segment = mons[len(mons) - h:] if h else []
    return sum(1 for m in segment if m[-1] == 0)
