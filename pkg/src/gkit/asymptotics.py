"""Lower-bound chain for mu_{d,k} and the limit constant of mu_{d,k}(r) / r^((d-k)/(d-1)).

Chain step.  Write x = h_{k-1} = h_{d-k+1} and t = d - k + 1.  Splitting off a general
linear form, h_k = M_{k-1} + B_k with M_{k-1} = h_t - B_t and B_t at most the Green
bound (x_(t))^-1_0, hence M_{k-1} >= (x_(t))^-1_-1.  B_k must grow to B_t within
s = d - 2k + 1 degrees, which at the Green ceiling needs at least (x_(t))^-(s+1)_-s.
Together

    mu_{d,k} >= (x_(t))^-1_-1 + (x_(t))^{-(d-2k+2)}_{-(d-2k+1)}.

For d = 4 this gives 12, 20, 30 at r = 13, 24, 40, which are the exact minima there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

import mpmath

from gkit.binomial import expand, shift
from gkit.perazzo import perazzo_codim, perazzo_hf


@dataclass
class MuChain:
    d: int
    m: int | None
    values: dict[int, int]  # k -> certified lower bound for mu_{d,k}
    terms: dict[int, tuple[int, int]] = field(default_factory=dict)  # k -> (section part, quotient part)

    def floor(self, k: int) -> int | None:
        if self.m is None:
            return None
        return comb(self.m + self.d - k - 1, self.d - k)


def chain_step(x: int, d: int, k: int) -> tuple[int, int]:
    """The two shifted terms bounding mu_{d,k} from a bound x on mu_{d,k-1}."""
    e = expand(x, d - k + 1)
    s = d - 2 * k + 1
    return shift(e, -1, -1), shift(e, -(s + 1), -s)


def chain_from_codim(r: int, d: int, m: int | None = None) -> MuChain:
    if d < 4:
        raise ValueError("d must be >= 4")
    if r < 1:
        raise ValueError("r must be >= 1")
    values = {1: r}
    terms = {}
    for k in range(2, d // 2 + 1):
        a, b = chain_step(values[k - 1], d, k)
        terms[k] = (a, b)
        values[k] = a + b
    return MuChain(d, m, values, terms)


def mu_lower_chain(d: int, m: int) -> MuChain:
    """Chain started at the full Perazzo codimension P_m = m + C(m+d-2, d-1)."""
    if d < 4:
        raise ValueError("d must be >= 4")
    if m < 3:
        raise ValueError("m must be >= 3")
    return chain_from_codim(perazzo_codim(m, d), d, m)


@dataclass(frozen=True)
class LimitConstant:
    d: int
    k: int
    base: int  # (d-1)!
    exponent: Fraction  # (d-k)/(d-1)
    denominator: int  # (d-k)!

    def evaluate(self, digits: int = 50) -> mpmath.mpf:
        with mpmath.workdps(digits + 10):
            value = mpmath.power(self.base, mpmath.mpf(self.exponent.numerator) / self.exponent.denominator)
            value = value / self.denominator
        return value

    def as_string(self, digits: int = 50) -> str:
        return mpmath.nstr(self.evaluate(digits), digits)


def limit_constant(d: int, k: int) -> LimitConstant:
    """((d-1)!)^((d-k)/(d-1)) / (d-k)!."""
    if d < 2 or not 1 <= k <= d // 2:
        raise ValueError("need d >= 2 and 1 <= k <= d // 2")
    return LimitConstant(d, k, factorial(d - 1), Fraction(d - k, d - 1), factorial(d - k))


@dataclass
class RatioRow:
    m: int
    r: int
    lower_ratio: mpmath.mpf
    perazzo_ratio: mpmath.mpf
    gap: mpmath.mpf  # |lower_ratio - limit| / limit


def _scaled(num: int, r: int, exponent: Fraction, digits: int) -> mpmath.mpf:
    with mpmath.workdps(digits + 10):
        return mpmath.mpf(num) / mpmath.power(r, mpmath.mpf(exponent.numerator) / exponent.denominator)


def ratio_scan(d: int, k: int, ms, digits: int = 50) -> list[RatioRow]:
    """Floor C(m+d-k-1, d-k) and Perazzo entry h_k, both over P_m^((d-k)/(d-1))."""
    const = limit_constant(d, k)
    limit = const.evaluate(digits)
    rows = []
    for m in ms:
        if m < 3:
            raise ValueError("m must be >= 3")
        r = perazzo_codim(m, d)
        floor = comb(m + d - k - 1, d - k)
        entry = perazzo_hf(m, d)[k]
        lo = _scaled(floor, r, const.exponent, digits)
        hi = _scaled(entry, r, const.exponent, digits)
        with mpmath.workdps(digits + 10):
            gap = abs(lo - limit) / limit
        rows.append(RatioRow(m, r, lo, hi, gap))
    return rows


def gaps_decreasing(rows: list[RatioRow]) -> bool:
    return all(b.gap < a.gap for a, b in zip(rows, rows[1:]))
