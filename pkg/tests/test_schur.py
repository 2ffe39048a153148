from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import lr_by_peeling, ssyt_count
from quotcalc.partitions import enumerate_box, negate, pad, size, transpose
from quotcalc.schur import (cauchy_ext, cauchy_sym, expansion_dim, lr_expand, pieri_ext, pieri_sym,
                            schur_dim, tensor)


def test_single_box_pieri():
    assert lr_expand((1,), (1,), 2) == {(2, 0): 1, (1, 1): 1}


def test_unit():
    assert lr_expand((3, 1), (), 3) == {(3, 1, 0): 1}


def test_21_squared_has_321_twice():
    exp = lr_expand((2, 1), (2, 1), 4)
    assert exp[(3, 2, 1, 0)] == 2
    assert sum(exp.values()) == 8


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lr_matches_monomial_peeling(n):
    for lam in enumerate_box(min(n, 3), 2):
        for mu in enumerate_box(min(n, 2), 2):
            want = {pad(k, n): v for k, v in lr_by_peeling(pad(lam, n), pad(mu, n), n).items()}
            assert lr_expand(lam, mu, n) == want, (lam, mu, n)


def test_lr_respects_rank_truncation():
    assert lr_expand((1,), (1,), 1) == {(2,): 1}
    assert lr_expand((1, 1), (1,), 2) == {(2, 1): 1}


def test_negative_weights_shift():
    # S^(0,-1) = V^vee, S^(1,0) = V, V (x) V^vee = S^(1,-1) + trivial
    assert tensor((1, 0), (0, -1), 2) == {(1, -1): 1, (0, 0): 1}
    with pytest.raises(ValueError):
        lr_expand((1,), (0, -1), 2)


def test_lr_entry_bounds():
    lam, mu = (3, 1, 0), (2, 1, 0)
    for nu in lr_expand(lam, mu, 3):
        for i in range(3):
            assert lam[i] + mu[-1] <= nu[i] <= lam[0] + mu[i]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_dimension_multiplicativity_and_symmetry(n):
    box = enumerate_box(min(n, 3), 3)
    for lam in box:
        for mu in box:
            exp = lr_expand(lam, mu, n)
            assert expansion_dim(exp, n) == schur_dim(lam, n) * schur_dim(mu, n)
            assert exp == lr_expand(mu, lam, n)


def test_pieri_examples():
    assert pieri_sym((1,), 1, 3) == {(2, 0, 0): 1, (1, 1, 0): 1}
    assert pieri_sym((2, 1), 0, 3) == {(2, 1, 0): 1}
    # only one box per row: (2) + two boxes in rows 1, 2 is (3,1)
    assert pieri_ext((2,), 2, 2) == {(3, 1): 1}
    assert pieri_ext((2,), 2, 2) == lr_expand((2,), (1, 1), 2)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_pieri_agrees_with_lr(m):
    for lam in enumerate_box(3, 3):
        assert pieri_sym(lam, m, 4) == lr_expand(lam, (m,), 4)
        assert pieri_ext(lam, m, 4) == lr_expand(lam, (1,) * m, 4)


def test_cauchy_examples():
    assert cauchy_ext(0, 2, 2) == [((), ())]
    assert cauchy_sym(1, 2, 3) == [((1,), (1,))]
    assert sorted(cauchy_ext(2, 2, 2)) == [((1, 1), (2,)), ((2,), (1, 1))]


@pytest.mark.parametrize("p,q", [(p, q) for p in (1, 2, 3) for q in (1, 2, 3)])
def test_cauchy_rank_identities(p, q):
    for m in range(p * q + 1):
        ext = sum(schur_dim(a, p) * schur_dim(b, q) for a, b in cauchy_ext(m, p, q))
        assert ext == comb(p * q, m)
        sym = sum(schur_dim(a, p) * schur_dim(b, q) for a, b in cauchy_sym(m, p, q))
        assert sym == comb(p * q + m - 1, m)


def test_dim_examples():
    assert schur_dim((1,), 4) == 4
    assert schur_dim((1, 1), 3) == 3
    assert schur_dim((2, 1), 3) == 8


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dim_counts_tableaux(n):
    for lam in enumerate_box(n, 4):
        assert schur_dim(lam, n) == ssyt_count(lam, n)


@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3).map(lambda v: tuple(sorted(v, reverse=True))))
def test_dim_duality(lam):
    assert schur_dim(lam, 3) == schur_dim(negate(lam), 3) > 0


@given(st.lists(st.integers(0, 3), max_size=3).map(lambda v: tuple(sorted(v, reverse=True))),
       st.lists(st.integers(0, 3), max_size=3).map(lambda v: tuple(sorted(v, reverse=True))))
def test_lr_sizes_add(lam, mu):
    for nu, mult in lr_expand(lam, mu, 3).items():
        assert mult >= 1 and sum(nu) == size(lam) + size(mu)
