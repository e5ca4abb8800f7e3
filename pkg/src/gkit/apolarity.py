"""Hilbert functions of Q/Ann(f) from catalecticant ranks.

For a form f of degree d, the degree-k piece of Q/Ann(f) is isomorphic to the span of
the derivatives alpha(f) with alpha a degree-k monomial operator, so h_k is the rank of
the matrix whose rows are the coefficient vectors of those derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from gkit.linalg import rational_rank
from gkit.polynomial import ExactPolynomial, apply_operator, falling, monomials


@dataclass
class CatalecticantMatrix:
    k: int
    d: int
    rows: list[tuple[int, ...]]  # operator exponents, lex-descending
    cols: list[tuple[int, ...]]  # monomials of degree d-k that occur in some image
    entries: list[list[Fraction]] = field(repr=False)

    def rank(self) -> int:
        return rational_rank(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)


def _derivative(op: tuple[int, ...], f: ExactPolynomial) -> dict[tuple[int, ...], Fraction]:
    out: dict[tuple[int, ...], Fraction] = {}
    for e, c in f.terms.items():
        if any(x < y for x, y in zip(e, op)):
            continue
        mult = 1
        for x, y in zip(e, op):
            if y:
                mult *= falling(x, y)
        exp = tuple(x - y for x, y in zip(e, op))
        out[exp] = out.get(exp, 0) + c * mult
    return {e: c for e, c in out.items() if c}


def _divisors(e: tuple[int, ...], k: int):
    # exponent vectors of degree k dividing e
    if not e:
        if k == 0:
            yield ()
        return
    for a in range(min(e[0], k), -1, -1):
        for rest in _divisors(e[1:], k - a):
            yield (a,) + rest


def _operators(f: ExactPolynomial, k: int, split: int | None = None, bideg=None):
    """Degree-k monomial operators that do not kill f, lex-descending.

    An operator is nonzero on f only if it divides some term, so this equals the
    full monomial basis with the identically-zero rows removed.
    """
    ops = set()
    for e in f.terms:
        ops.update(_divisors(e, k))
    if split is not None:
        ops = {a for a in ops if sum(a[:split]) == bideg[0]}
    return sorted(ops, reverse=True)


def _catalecticant(f, k, ops, skip_zero_rows=True) -> CatalecticantMatrix:
    d = f.homogeneous_degree()
    images = []
    row_ops = []
    for op in ops:
        img = _derivative(op, f)
        if not img and skip_zero_rows:
            continue
        row_ops.append(op)
        images.append(img)
    cols = sorted({e for img in images for e in img}, reverse=True)
    index = {e: i for i, e in enumerate(cols)}
    entries = []
    for img in images:
        row = [Fraction(0)] * len(cols)
        for e, c in img.items():
            row[index[e]] = c
        entries.append(row)
    return CatalecticantMatrix(k, d, row_ops, cols, entries)


def _require_form(f: ExactPolynomial) -> int:
    if not f:
        raise ValueError("f must be nonzero")
    d = f.homogeneous_degree()
    if d is None:
        raise ValueError("f must be homogeneous")
    return d


def catalecticant(f: ExactPolynomial, k: int, *, skip_zero_rows: bool = True) -> CatalecticantMatrix:
    d = _require_form(f)
    if not 0 <= k <= d:
        raise ValueError("k out of range")
    ops = monomials(f.num_vars, k) if not skip_zero_rows else _operators(f, k)
    return _catalecticant(f, k, ops, skip_zero_rows)


def ann_hilbert_function(f: ExactPolynomial) -> tuple[int, ...]:
    """(h_0, ..., h_d) of Q/Ann(f), every degree computed independently."""
    d = _require_form(f)
    return tuple(catalecticant(f, k).rank() for k in range(d + 1))


def inert_variables(f: ExactPolynomial) -> list[int]:
    """Indices of variables that do not occur in f (each contributes to I_1)."""
    used = f.support_variables()
    return [i for i in range(f.num_vars) if i not in used]


def linear_relations(f: ExactPolynomial) -> int:
    """dim I_1 = num_vars - h_1; nonzero means the codimension is smaller than num_vars."""
    return f.num_vars - catalecticant(f, 1).rank()


def bigraded_hilbert(f: ExactPolynomial, split: tuple[int, int]) -> dict[tuple[int, int], int]:
    """dim A_(i,j) for 0 <= i <= d1, 0 <= j <= d2, with f of bidegree (d1, d2)."""
    _require_form(f)
    n, m = split
    if n < 0 or m < 0 or n + m != f.num_vars:
        raise ValueError("split sizes must sum to the number of variables")
    bidegs = f.bidegrees(n)
    if len(bidegs) != 1:
        raise ValueError("f is not bihomogeneous under this split")
    d1, d2 = bidegs.pop()
    table = {}
    for i in range(d1 + 1):
        for j in range(d2 + 1):
            ops = _operators(f, i + j, n, (i, j))
            table[(i, j)] = _catalecticant(f, i + j, ops).rank()
    return table


def bigraded_totals(table: dict[tuple[int, int], int]) -> tuple[int, ...]:
    top = max(i + j for i, j in table)
    totals = [0] * (top + 1)
    for (i, j), v in table.items():
        totals[i + j] += v
    return tuple(totals)


__all__ = [
    "CatalecticantMatrix",
    "ExactPolynomial",
    "apply_operator",
    "ann_hilbert_function",
    "bigraded_hilbert",
    "bigraded_totals",
    "catalecticant",
    "inert_variables",
    "linear_relations",
]
