import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gkit.linalg import bareiss_rank, rational_rank
from gkit.polynomial import ExactPolynomial, apply_operator, monomials
from oracles import fraction_rank


def test_monomials_lex_descending():
    assert list(monomials(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(monomials(3, 4))) == 15


def test_text_format():
    text = "# a comment\nvars 3\n3/2  1 0 2\n-1  0 3 0\n"
    f = ExactPolynomial.from_text(text)
    assert f.terms == {(1, 0, 2): Fraction(3, 2), (0, 3, 0): Fraction(-1)}
    assert ExactPolynomial.from_text(f.to_text()) == f
    with pytest.raises(ValueError):
        ExactPolynomial.from_text("vars 2\n1  1 0 0\n")
    with pytest.raises(ValueError):
        ExactPolynomial.from_text("x  1 0\n")


def test_json_format():
    data = {"vars": 3, "terms": [{"c": "3/2", "e": [1, 0, 2]}]}
    f = ExactPolynomial.from_json(json.dumps(data))
    assert f.to_json() == data
    assert ExactPolynomial.from_json(f.to_json()) == f


def test_load(tmp_path):
    f = ExactPolynomial(2, {(2, 1): Fraction(5, 3), (0, 3): 1})
    p = tmp_path / "f.txt"
    p.write_text(f.to_text())
    assert ExactPolynomial.load(p) == f
    p = tmp_path / "f.json"
    p.write_text(json.dumps(f.to_json()))
    assert ExactPolynomial.load(p) == f


def test_apply_operator_is_differentiation():
    f = ExactPolynomial(2, {(3, 1): 1})
    d_x2 = ExactPolynomial(2, {(2, 0): 1})
    assert apply_operator(d_x2, f) == ExactPolynomial(2, {(1, 1): 6})
    d_y2 = ExactPolynomial(2, {(0, 2): 1})
    assert not apply_operator(d_y2, f)


def test_zero_coefficients_dropped():
    f = ExactPolynomial(1, {(2,): 1}) + ExactPolynomial(1, {(2,): -1})
    assert not f and f.terms == {}


matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=0, max_size=7))


@given(matrices)
def test_bareiss_matches_gauss(rows):
    expected = fraction_rank(rows) if rows else 0
    assert bareiss_rank(rows) == expected


@given(matrices, st.integers(1, 7))
def test_rational_rank_scale_invariant(rows, q):
    scaled = [[Fraction(x, q) for x in r] for r in rows]
    assert rational_rank(scaled) == (fraction_rank(rows) if rows else 0)
