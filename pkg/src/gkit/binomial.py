"""Macaulay binomial expansions and the classical Hilbert-function growth bounds.

An integer ``k`` written in its ``i``-binomial expansion is

    k = C(k_i, i) + C(k_{i-1}, i-1) + ... + C(k_j, j),   k_i > k_{i-1} > ... > k_j >= j >= 1

and the shifted operator ``(k_(i))^b_a`` adds ``b`` to every top and ``a`` to every
bottom.  Binomials with ``s < c`` or ``c < 0`` are zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


def binom(s: int, c: int) -> int:
    """C(s, c) with the convention C(s, c) = 0 whenever s < c or c < 0."""
    if c < 0 or s < c:
        return 0
    return comb(s, c)


@dataclass(frozen=True)
class MacaulayExpansion:
    value: int
    degree: int
    parts: tuple[tuple[int, int], ...]  # (top, bottom), bottoms i, i-1, ..., j

    def __post_init__(self):
        total = sum(comb(top, bot) for top, bot in self.parts)
        if total != self.value:
            raise ValueError(f"parts sum to {total}, not {self.value}")
        expected_bottom = self.degree
        prev_top = None
        for top, bot in self.parts:
            if bot != expected_bottom or bot < 1 or top < bot:
                raise ValueError(f"malformed part C({top},{bot})")
            if prev_top is not None and top >= prev_top:
                raise ValueError("tops must strictly decrease")
            prev_top = top
            expected_bottom -= 1

    def shift(self, b: int, a: int) -> int:
        return shift(self, b, a)

    def __str__(self) -> str:
        if not self.parts:
            return "0"
        return "+".join(f"C({top},{bot})" for top, bot in self.parts)


def _largest_top(k: int, i: int) -> int:
    # largest t with C(t, i) <= k, for k >= 1
    lo, hi = i, i + 1
    while comb(hi, i) <= k:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, i) <= k:
            lo = mid
        else:
            hi = mid
    return lo


def expand(k: int, i: int) -> MacaulayExpansion:
    """Greedy ``i``-binomial expansion of ``k``."""
    if i < 1:
        raise ValueError("expansion degree must be >= 1")
    if k < 0:
        raise ValueError("cannot expand a negative integer")
    parts = []
    rest, deg = k, i
    while rest > 0:
        top = _largest_top(rest, deg)
        parts.append((top, deg))
        rest -= comb(top, deg)
        deg -= 1
    return MacaulayExpansion(k, i, tuple(parts))


def shift(e: MacaulayExpansion, b: int, a: int) -> int:
    """Evaluate ``(e)^b_a``: sum of C(top + b, bottom + a) over the parts of ``e``."""
    return sum(binom(top + b, bot + a) for top, bot in e.parts)


def _check_degree(d: int) -> None:
    if d < 1:
        raise ValueError("degree must be >= 1")


def macaulay_bound(h: int, d: int) -> int:
    """Largest admissible entry in degree d+1 following ``h`` in degree d."""
    _check_degree(d)
    return shift(expand(h, d), 1, 1)


def green_bound(h: int, d: int) -> int:
    """Upper bound for the degree-d entry of a general hyperplane section."""
    _check_degree(d)
    return shift(expand(h, d), -1, 0)


def gotzmann_growth(h: int, d: int, s: int) -> int:
    """Persistent maximal growth ``((h)_(d))^s_s``."""
    _check_degree(d)
    if s < 1:
        raise ValueError("s must be >= 1")
    return shift(expand(h, d), s, s)


def macaulay_preimage(target: int, d: int, steps: int = 1) -> int:
    """Smallest b such that maximal growth from b in degree d reaches ``target``
    after ``steps`` degrees.

    Maximal growth is nondecreasing in b, so a binary search suffices.
    """
    _check_degree(d)
    if target <= 0:
        return 0
    lo, hi = 0, target
    # growth never shrinks a positive value, so b = target always reaches it
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if shift(expand(mid, d), steps, steps) >= target:
            hi = mid
        else:
            lo = mid
    return hi
