"""Full Perazzo polynomials and their Hilbert functions.

The full Perazzo form of type m and degree d is f = sum_j x_j M_j where M_1, ..., M_tau
run over all degree-(d-1) monomials in u_1..u_m (lex-descending), tau = C(m+d-2, d-1).
Its algebra has codimension m + tau and, for 0 < k <= d/2,

    h_k = C(m+k-1, k) + C(m+d-k-1, d-k).
"""

from __future__ import annotations

from dataclasses import dataclass

from gkit.binomial import binom
from gkit.polynomial import ExactPolynomial, monomials
from gkit.sequences import is_totally_nonunimodal


@dataclass(frozen=True)
class PerazzoParams:
    m: int
    d: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("Perazzo type m must be >= 2")
        if self.d < 3:
            raise ValueError("socle degree d must be >= 3")

    @property
    def tau(self) -> int:
        return binom(self.m + self.d - 2, self.d - 1)

    @property
    def codim(self) -> int:
        return self.m + self.tau


def _params(p, d=None) -> PerazzoParams:
    if isinstance(p, PerazzoParams):
        return p
    return PerazzoParams(p, d)


def perazzo_codim(p: PerazzoParams | int, d: int | None = None) -> int:
    return _params(p, d).codim


def perazzo_entry(m: int, d: int, k: int) -> int:
    """h_k for 0 < k < d, using the symmetric half."""
    k = min(k, d - k)
    return binom(m + k - 1, k) + binom(m + d - k - 1, d - k)


def perazzo_hf(p: PerazzoParams | int, d: int | None = None) -> tuple[int, ...]:
    p = _params(p, d)
    inner = [perazzo_entry(p.m, p.d, k) for k in range(1, p.d)]
    return (1, *inner, 1)


def extend_with_powers(p: PerazzoParams | int, s: int, d: int | None = None) -> tuple[int, ...]:
    """Hilbert function of f + y_1^d + ... + y_s^d: every inner entry grows by s."""
    if s < 0:
        raise ValueError("s must be >= 0")
    h = perazzo_hf(_params(p, d))
    return (1, *(x + s for x in h[1:-1]), 1)


def full_perazzo_poly(p: PerazzoParams | int, d: int | None = None) -> ExactPolynomial:
    """Variables ordered x_1..x_tau, u_1..u_m."""
    p = _params(p, d)
    tau = p.tau
    terms = {}
    for j, mono in enumerate(monomials(p.m, p.d - 1)):
        x = [0] * tau
        x[j] = 1
        terms[tuple(x) + mono] = 1
    return ExactPolynomial(tau + p.m, terms)


def add_powers(f: ExactPolynomial, s: int) -> ExactPolynomial:
    """f + y_1^d + ... + y_s^d in s fresh trailing variables."""
    d = f.homogeneous_degree()
    if d is None:
        raise ValueError("f must be homogeneous")
    n = f.num_vars + s
    terms = {e + (0,) * s: c for e, c in f.terms.items()}
    for i in range(s):
        y = [0] * s
        y[i] = d
        terms[(0,) * f.num_vars + tuple(y)] = 1
    return ExactPolynomial(n, terms)


def nonunimodal_threshold(d: int, m_max: int = 200) -> int | None:
    """Smallest m >= 2 whose full Perazzo Hilbert function is totally non-unimodal."""
    for m in range(2, m_max + 1):
        if is_totally_nonunimodal(perazzo_hf(m, d)):
            return m
    return None
