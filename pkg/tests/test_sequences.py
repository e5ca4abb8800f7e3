import pytest
from hypothesis import given, strategies as st

from gkit.sequences import (
    NotComparable,
    Order,
    compare,
    compressed_upper,
    is_gorenstein_shape,
    is_o_sequence,
    is_symmetric,
    is_totally_nonunimodal,
    is_unimodal,
    parse_candidate,
)


def test_parse_candidate():
    assert parse_candidate("1,13,12,13,1") == (1, 13, 12, 13, 1)
    assert parse_candidate(" 1 13, 12 ,13 1 ") == (1, 13, 12, 13, 1)
    for bad in ("", "1,a,2", "1,-3,1"):
        with pytest.raises(ValueError):
            parse_candidate(bad)


def test_shape_examples():
    assert is_gorenstein_shape((1, 13, 12, 13, 1))
    assert is_gorenstein_shape((1, 1))
    assert not is_gorenstein_shape((1, 3, 7, 3, 1))  # 7 > C(4,2)
    assert not is_gorenstein_shape((1, 5, 6, 4, 1))
    assert not is_gorenstein_shape((2, 5, 5, 2))
    assert is_o_sequence((1, 3, 6, 10))
    assert not is_o_sequence((1, 3, 6, 11))


def test_unimodality():
    assert is_totally_nonunimodal((1, 13, 12, 13, 1))
    assert not is_totally_nonunimodal((1, 5, 7, 5, 1))
    assert not is_unimodal((1, 13, 12, 13, 1))
    assert is_unimodal((1, 5, 7, 5, 1))


def test_compare():
    assert compare((1, 13, 12, 13, 1), (1, 13, 12, 13, 1)) is Order.EQUAL
    assert compare((1, 13, 11, 13, 1), (1, 13, 12, 13, 1)) is Order.LESS
    assert compare((1, 13, 12, 13, 1), (1, 13, 11, 13, 1)) is Order.GREATER
    assert compare((1, 9, 5, 7, 5, 9, 1), (1, 9, 6, 6, 6, 9, 1)) is Order.INCOMPARABLE
    with pytest.raises(NotComparable, match="not comparable family"):
        compare((1, 13, 12, 13, 1), (1, 14, 12, 14, 1))
    with pytest.raises(NotComparable):
        compare((1, 13, 12, 13, 1), (1, 13, 12, 12, 13, 1))


def test_compressed_upper():
    assert compressed_upper(13, 2) == 91
    with pytest.raises(ValueError):
        compressed_upper(0, 2)


vectors = st.lists(st.integers(0, 30), min_size=1, max_size=8)


@given(vectors)
def test_shape_implies_parts(h):
    h = [1] + h + [1]
    if is_gorenstein_shape(h):
        assert is_symmetric(h) and is_o_sequence(h)


@given(vectors, vectors)
def test_compare_is_antisymmetric(a, b):
    n = min(len(a), len(b))
    h = (1, 7, *a[:n], 7, 1)
    g = (1, 7, *b[:n], 7, 1)
    flip = {Order.LESS: Order.GREATER, Order.GREATER: Order.LESS,
            Order.EQUAL: Order.EQUAL, Order.INCOMPARABLE: Order.INCOMPARABLE}
    assert compare(g, h) is flip[compare(h, g)]


@given(st.integers(1, 40), st.integers(1, 6))
def test_compressed_is_o_sequence(r, d):
    h = [1] + [compressed_upper(r, k) for k in range(1, d + 1)]
    assert is_o_sequence(h)
