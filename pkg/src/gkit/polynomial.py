"""Multivariate polynomials with exact rational coefficients.

Terms are stored as ``{exponent tuple: Fraction}``; zero coefficients are never stored.
Two serializations are supported:

* text, one term per line: ``coeff e1 e2 ... eN`` with ``coeff`` an integer or ``p/q``.
  Blank lines and lines starting with ``#`` are ignored.  An optional header line
  ``vars N`` fixes the variable count (needed for the zero polynomial).
* JSON: ``{"vars": N, "terms": [{"c": "3/2", "e": [1, 0, 2]}, ...]}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import prod
from typing import Iterator, Mapping


def monomials(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of degree k in n variables, lex-descending (x1^k first)."""
    if n == 0:
        if k == 0:
            yield ()
        return
    if n == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in monomials(n - 1, k - first):
            yield (first,) + rest


def falling(a: int, b: int) -> int:
    """a (a-1) ... (a-b+1)."""
    return prod(range(a - b + 1, a + 1))


class ExactPolynomial:
    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple[int, ...], Fraction | int] = ()):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        self.num_vars = num_vars
        self.terms: dict[tuple[int, ...], Fraction] = {}
        for exp, c in dict(terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {num_vars} variables")
            c = Fraction(c)
            if c:
                self.terms[exp] = self.terms.get(exp, Fraction(0)) + c
                if not self.terms[exp]:
                    del self.terms[exp]

    @classmethod
    def monomial(cls, exp, coeff=1) -> "ExactPolynomial":
        return cls(len(exp), {tuple(exp): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if self.num_vars != other.num_vars:
            raise ValueError("variable count mismatch")
        out = ExactPolynomial(self.num_vars, self.terms)
        for exp, c in other.terms.items():
            v = out.terms.get(exp, Fraction(0)) + c
            if v:
                out.terms[exp] = v
            else:
                out.terms.pop(exp, None)
        return out

    def __repr__(self) -> str:
        return f"ExactPolynomial({self.num_vars}, {len(self.terms)} terms)"

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def homogeneous_degree(self) -> int | None:
        """Common total degree, or None if the polynomial is zero or inhomogeneous."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def bidegrees(self, n: int) -> set[tuple[int, int]]:
        return {(sum(e[:n]), sum(e[n:])) for e in self.terms}

    def support_variables(self) -> set[int]:
        return {i for e in self.terms for i, x in enumerate(e) if x}

    # -- serialization -------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"vars {self.num_vars}"]
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            lines.append(f"{c}  " + " ".join(map(str, exp)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ExactPolynomial":
        num_vars = None
        terms: dict[tuple[int, ...], Fraction] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if fields[0] == "vars":
                num_vars = int(fields[1])
                continue
            try:
                c = Fraction(fields[0])
                exp = tuple(int(x) for x in fields[1:])
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
            if num_vars is None:
                num_vars = len(exp)
            if len(exp) != num_vars:
                raise ValueError(f"line {lineno}: expected {num_vars} exponents")
            terms[exp] = terms.get(exp, Fraction(0)) + c
        if num_vars is None:
            raise ValueError("no terms and no 'vars' header")
        return cls(num_vars, terms)

    def to_json(self) -> dict:
        return {
            "vars": self.num_vars,
            "terms": [{"c": str(self.terms[e]), "e": list(e)} for e in sorted(self.terms, reverse=True)],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "ExactPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        terms: dict[tuple[int, ...], Fraction] = {}
        for t in data["terms"]:
            exp = tuple(t["e"])
            terms[exp] = terms.get(exp, Fraction(0)) + Fraction(str(t["c"]))
        return cls(int(data["vars"]), terms)

    @classmethod
    def load(cls, path) -> "ExactPolynomial":
        with open(path) as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            return cls.from_json(text)
        return cls.from_text(text)


def apply_operator(alpha: ExactPolynomial, f: ExactPolynomial) -> ExactPolynomial:
    """alpha(d/dx_1, ..., d/dx_n) applied to f."""
    if alpha.num_vars != f.num_vars:
        raise ValueError("variable count mismatch")
    out: dict[tuple[int, ...], Fraction] = {}
    for a, ca in alpha.terms.items():
        for e, cf in f.terms.items():
            if any(x < y for x, y in zip(e, a)):
                continue
            mult = prod(falling(x, y) for x, y in zip(e, a) if y)
            exp = tuple(x - y for x, y in zip(e, a))
            out[exp] = out.get(exp, Fraction(0)) + ca * cf * mult
    return ExactPolynomial(f.num_vars, out)
