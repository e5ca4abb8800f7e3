"""Predicates on candidate Hilbert functions (1, r, h_2, ..., r, 1)."""

from __future__ import annotations

import enum
import re
from typing import Iterable, Sequence

from gkit.binomial import binom, macaulay_bound


class NotComparable(ValueError):
    """Raised when two candidates do not share socle degree and codimension."""


class Order(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"


def parse_candidate(text: str) -> tuple[int, ...]:
    """Parse ``"1,13,12,13,1"`` (commas and/or whitespace) into a tuple."""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not tokens:
        raise ValueError("empty candidate")
    entries = tuple(int(t) for t in tokens)
    if any(e < 0 for e in entries):
        raise ValueError("entries must be nonnegative")
    return entries


def socle_degree(h: Sequence[int]) -> int:
    return len(h) - 1


def is_o_sequence(h: Sequence[int]) -> bool:
    if not h or h[0] != 1:
        return False
    if any(x < 0 for x in h):
        return False
    return all(h[k + 1] <= macaulay_bound(h[k], k) for k in range(1, len(h) - 1))


def is_symmetric(h: Sequence[int]) -> bool:
    return all(h[k] == h[-1 - k] for k in range(len(h) // 2 + 1))


def is_gorenstein_shape(h: Sequence[int]) -> bool:
    """Symmetric O-sequence with h_0 = h_d = 1.

    Only a necessary condition; actual Gorenstein-ness is not decided here.
    """
    if len(h) <= 2:
        return all(x == 1 for x in h)
    return h[0] == 1 and h[-1] == 1 and is_symmetric(h) and is_o_sequence(h)


def compare(h: Sequence[int], g: Sequence[int]) -> Order:
    """Componentwise order on h_2 .. h_{d-2} within a fixed (r, d) family."""
    if len(h) != len(g) or len(h) < 2 or h[1] != g[1]:
        raise NotComparable("not comparable family")
    le = all(a <= b for a, b in zip(h[2:-2], g[2:-2]))
    ge = all(a >= b for a, b in zip(h[2:-2], g[2:-2]))
    if le and ge:
        return Order.EQUAL
    if le:
        return Order.LESS
    if ge:
        return Order.GREATER
    return Order.INCOMPARABLE


def compressed_upper(r: int, k: int) -> int:
    """C(r+k-1, k): number of degree-k monomials in r variables."""
    if r < 1 or k < 1:
        raise ValueError("r and k must be >= 1")
    return binom(r + k - 1, k)


def is_totally_nonunimodal(h: Sequence[int]) -> bool:
    """h_1 > h_2 > ... > h_{floor(d/2)}."""
    half = socle_degree(h) // 2
    return all(h[k] > h[k + 1] for k in range(1, half))


def is_unimodal(h: Iterable[int]) -> bool:
    seen_drop = False
    prev = None
    for x in h:
        if prev is not None:
            if x < prev:
                seen_drop = True
            elif x > prev and seen_drop:
                return False
        prev = x
    return True
