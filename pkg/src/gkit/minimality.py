"""Minimality of a Gorenstein candidate at fixed codimension and socle degree.

H is minimal when no Gorenstein H' != H with the same h_1 satisfies H' <= H
componentwise.  Gorenstein-ness is not downward closed, so every vector below H has to
be ruled out on its own; `check_minimal` enumerates them all and runs the elimination
pipeline on each.  A vector that fails the shape test (symmetric O-sequence) is ruled
out without a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from gkit.elimination import Verdict, eliminate
from gkit.perazzo import perazzo_hf
from gkit.sequences import is_gorenstein_shape


@dataclass
class MinimalityReport:
    candidate: tuple[int, ...]
    below: int = 0  # vectors strictly below with the same h_1
    bad_shape: int = 0
    eliminated: int = 0
    survivors: list[tuple[int, ...]] = field(default_factory=list)
    unknown: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def confirmed(self) -> bool:
        return not self.survivors and not self.unknown


def vectors_below(h: Sequence[int], max_drop: int | None = None):
    """Symmetric vectors with the same h_0, h_1 and entries h'_k <= h_k, excluding h itself."""
    h = tuple(h)
    d = len(h) - 1
    free = list(range(2, d // 2 + 1))
    floor = (lambda v: 0) if max_drop is None else (lambda v: max(0, v - max_drop))
    ranges = [range(h[k], floor(h[k]) - 1, -1) for k in free]
    for values in product(*ranges):
        if all(v == h[k] for v, k in zip(values, free)):
            continue
        g = list(h)
        for v, k in zip(values, free):
            g[k] = g[d - k] = v
        yield tuple(g)


def check_minimal(h: Sequence[int], *, max_drop: int | None = None, depth: int = 2,
                  branch_cap: int = 10**5, use_cited: bool = True) -> MinimalityReport:
    """Try to rule out every vector below h; max_drop limits how far each entry may fall."""
    h = tuple(int(x) for x in h)
    if len(h) < 5:
        raise ValueError("socle degree must be >= 4")
    report = MinimalityReport(h)
    for g in vectors_below(h, max_drop):
        report.below += 1
        if not is_gorenstein_shape(g):
            report.bad_shape += 1
            continue
        cert = eliminate(g, depth, branch_cap, use_cited=use_cited)
        if cert.verdict is Verdict.ELIMINATED:
            report.eliminated += 1
        elif cert.verdict is Verdict.PASS:
            report.survivors.append(g)
        else:
            report.unknown.append(g)
    return report


def perazzo_minimality(m: int, d: int, **kwargs) -> MinimalityReport:
    """The full Perazzo minimality statement for one (m, d), as far as elimination decides it."""
    return check_minimal(perazzo_hf(m, d), **kwargs)
