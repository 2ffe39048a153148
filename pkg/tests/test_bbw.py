from itertools import product
from math import comb

import pytest

from oracles import ssyt_count
from quotcalc.bbw import (HomogeneousBundle, bbw, bbw_ab, canonical_bundle, cohomology_sections_table,
                          line_bundle_on_projective_space, serre_partner)
from quotcalc.partitions import negate
from quotcalc.schur import schur_dim
from quotcalc.suites import cech_line_bundle


def test_structure_sheaf():
    res = bbw_ab(2, 1, (0,), (0,))
    assert (res.vanishing, res.degree, res.weight) == (False, 0, (0, 0))


def test_singular_weight_vanishes():
    assert bbw_ab(2, 1, (0,), (1,)).vanishing


def test_h1_of_o_minus_two_on_p1():
    res = bbw_ab(2, 1, (0,), (2,))
    assert (res.degree, res.weight) == (1, (1, 1))
    assert res.to_json() == {"vanishing": False, "degree": 1, "weight": [1, 1]}


def test_sections_lemma():
    family = [((1, 0), (0, 0)), ((0, 0), (0, -1)), ((0, 0), (1, 0)), ((-1, -1), (0, 0))]
    table = cohomology_sections_table(4, 2, family)
    assert (table[0].degree, table[0].weight) == (0, (1, 0, 0, 0))
    # the b slot carries Q^vee, so Q itself is b = (0,-1) with H^0 = V
    assert (table[1].degree, table[1].weight) == (0, (0, 0, 0, -1))
    assert table[2].vanishing
    # det U on Gr_2(4): -1 entries next to rho collide, so everything vanishes
    assert table[3].vanishing


@pytest.mark.parametrize("r", [1, 2])
@pytest.mark.parametrize("d", range(-6, 7))
def test_line_bundles_match_cech(r, d):
    res = bbw(line_bundle_on_projective_space(r, d))
    got = {} if res.vanishing else {res.degree: res.dim(r + 1)}
    assert got == cech_line_bundle(r, d)


@pytest.mark.parametrize("d", range(-6, 7))
def test_cech_oracle_against_binomials(d):
    want = {}
    if d >= 0:
        want[0] = comb(d + 2, 2)
    if d <= -3:
        want[2] = comb(-d - 1, 2)
    assert cech_line_bundle(2, d) == want


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        HomogeneousBundle(4, 2, (1,), (0, 0))
    with pytest.raises(ValueError):
        HomogeneousBundle(4, 5, (), ())


def _weights(length, lo=-3, hi=3):
    for t in product(range(lo, hi + 1), repeat=length):
        if all(t[i] >= t[i + 1] for i in range(length - 1)):
            yield t


@pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (4, 2), (5, 2)])
def test_serre_duality_and_degree_bound(n, k):
    top = k * (n - k)
    for a in _weights(k):
        for b in _weights(n - k):
            E = HomogeneousBundle(n, k, a, b)
            res, dual = bbw(E), bbw(serre_partner(E))
            assert res.vanishing == dual.vanishing
            if not res.vanishing:
                assert 0 <= res.degree <= top
                assert dual.degree == top - res.degree
                assert dual.weight == negate(res.weight)


def test_canonical_bundle_top_cohomology():
    res = bbw(canonical_bundle(5, 2))
    assert res.degree == 6 and res.dim(5) == 1


def test_dimension_via_tableaux():
    # H^0(Gr_2(4), S^2 U^vee) = S^2 V^vee, dimension counted by tableaux
    res = bbw_ab(4, 2, (2, 0), (0, 0))
    assert res.dim(4) == ssyt_count((2,), 4) == schur_dim((2,), 4)
