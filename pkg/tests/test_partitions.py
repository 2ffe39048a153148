from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from quotcalc.partitions import (BoxOrder, Comparison, check_partition, compare, enumerate_box, fmt,
                                 in_box, negate, pad, parse, preceq, shift, sign, size, total_key,
                                 transpose, trim)


def brute_box(ell, d):
    """Every non-increasing tuple in [0,d]^ell, trimmed."""
    return {trim(t) for t in product(range(d + 1), repeat=ell) if all(t[i] >= t[i + 1] for i in range(ell - 1))} \
        if ell else {()}


def test_empty_box_is_singleton():
    assert enumerate_box(0, 5) == [()]
    assert enumerate_box(3, 0) == [()]


def test_small_boxes_in_total_order():
    assert enumerate_box(1, 2) == [(), (1,), (2,)]
    assert enumerate_box(2, 2) == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]


def test_total_order_chain():
    # (0) < (1) < (2) < (1,1) < (3)
    chain = [(), (1,), (2,), (1, 1), (3,)]
    assert sorted(chain, key=total_key) == chain
    assert compare((1, 1), (3,), BoxOrder.TOTAL) is Comparison.LESS


def test_partial_comparisons():
    assert compare((2,), (1, 1), BoxOrder.PARTIAL) is Comparison.INCOMPARABLE
    assert compare((1,), (2, 1), BoxOrder.PARTIAL) is Comparison.LESS
    assert compare((2, 1), (2, 1, 0), BoxOrder.PARTIAL) is Comparison.EQUAL


@pytest.mark.parametrize("ell,d", [(e, d) for e in range(7) for d in range(7)])
def test_box_count_and_content(ell, d):
    box = enumerate_box(ell, d)
    assert len(box) == comb(ell + d, d)
    assert set(box) == brute_box(ell, d)


@pytest.mark.parametrize("ell,d", [(3, 3), (4, 2), (2, 5), (5, 5)])
def test_total_order_extends_inclusion(ell, d):
    box = enumerate_box(ell, d)
    pos = {lam: i for i, lam in enumerate(box)}
    for a in box:
        for b in box:
            if a != b and preceq(a, b):
                assert pos[a] < pos[b]


def test_opposite_orders_reverse():
    assert enumerate_box(3, 2, BoxOrder.TOTAL_OPPOSITE) == enumerate_box(3, 2)[::-1]


def test_transpose_examples():
    assert transpose((2, 1)) == (2, 1)
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose((4, 4, 4)) == (3, 3, 3, 3)
    with pytest.raises(ValueError):
        transpose((1, -1))


@pytest.mark.parametrize("ell,d", [(3, 4), (4, 3), (5, 2)])
def test_transpose_is_box_bijection(ell, d):
    assert sorted(map(transpose, enumerate_box(ell, d)), key=total_key) == sorted(enumerate_box(d, ell), key=total_key)


def test_weight_arithmetic():
    assert shift((2, 1), 1) == (3, 2)
    assert negate((2, 0)) == (0, -2)
    assert size((2, 1, 1)) == 4
    assert pad((2,), 3) == (2, 0, 0)
    with pytest.raises(ValueError):
        pad((1, 1, 1), 2)


def test_length_is_significant():
    assert (2, 1) != (2, 1, 0)
    assert in_box((2, 1, 0), 2, 2)


def test_text_round_trip():
    assert fmt((3, 1, 0)) == "(3,1,0)"
    assert parse("(3,1,0)") == (3, 1, 0)
    assert parse("") == ()
    with pytest.raises(ValueError):
        parse("1,2")
    with pytest.raises(ValueError):
        check_partition((1, -1))


def test_sign_handles_negative_degrees():
    assert [sign(p) for p in (-3, -2, 0, 1)] == [-1, 1, 1, -1]


weights = st.lists(st.integers(-5, 5), max_size=6).map(lambda v: tuple(sorted(v, reverse=True)))
partitions = st.lists(st.integers(0, 6), max_size=6).map(lambda v: trim(sorted(v, reverse=True)))


@given(weights, st.integers(-4, 4))
def test_shift_and_negate_invert(lam, k):
    assert shift(shift(lam, k), -k) == lam
    assert negate(negate(lam)) == lam


@given(partitions)
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert size(transpose(lam)) == size(lam)


@given(partitions, partitions)
def test_total_compare_never_incomparable(a, b):
    assert compare(a, b, BoxOrder.TOTAL) is not Comparison.INCOMPARABLE
