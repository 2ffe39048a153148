import random

import pytest

from quotcalc import grassmann as gr
from quotcalc.grassmann import SchurBundle
from quotcalc.partitions import enumerate_box, in_box, preceq, size, transpose
from quotcalc.schur import cauchy_sym, schur_dim
from quotcalc.suites import proved_probe


def test_exceptional_object():
    t = gr.ext_schur(4, 2, "Q", (1,), (1,))
    assert t.degrees() == [0] and t.terms[0] == {(0, 0, 0, 0): 1}


def test_mixed_pairing_degree_one():
    assert gr.ext_schur(4, 2, "mixed", (1,), (1,)).dims() == {1: 1}


def test_vanishing_outside_inclusion():
    assert gr.ext_schur(4, 2, "Q", (2,), (1,)).is_zero()


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (5, 3)])
def test_kapranov_tables(n, k):
    ell = n - k
    for lam in enumerate_box(ell, k):
        for mu in enumerate_box(ell, k):
            t = gr.ext_schur(n, k, "Q", lam, mu)
            assert (not t.is_zero()) == preceq(lam, mu)
            assert t.is_zero() or t.degrees() == [0]
    for lam in enumerate_box(k, ell):
        for mu in enumerate_box(k, ell):
            want = {size(lam): 1} if lam == mu else {}
            assert gr.ext_schur(n, k, "mixed", transpose(lam), mu).dims() == want


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError):
        gr.ext_schur(4, 2, "Q", (1, 1, 1), ())


def test_total_space_degree_zero_is_ext_schur():
    tables = gr.ext_on_total_space(2, 4, 2, "+", (1,), (1, 1), 0)
    assert tables[0].terms == gr.ext_schur(4, 2, "Q", (1,), (1, 1), (True, True)).terms


def test_total_space_hom_dimension_by_cauchy():
    # (m,n,d) = (1,3,1), lam = mu = empty: Hom at Sym-degree s is H^0(Gr_1(3), S^s Q)
    tables = gr.ext_on_total_space(1, 3, 1, "+", (), (), 3)
    for s, t in tables.items():
        assert t.degrees() == [0]
        want = sum(schur_dim(a, 1) * gr.cohomology(3, 1, [SchurBundle("Q", a)]).dims()[0]
                   for a, _ in cauchy_sym(s, 1, 2))
        assert t.dims()[0] == want


@pytest.mark.parametrize("m,n,d", [(1, 3, 1), (2, 4, 2), (2, 3, 1)])
@pytest.mark.parametrize("side", ["+", "-"])
def test_tilting(m, n, d, side):
    if side == "-" and d > m:
        pytest.skip("no minus side")
    assert gr.tilting_check(m, n, d, side, 4) is None


def test_tilting_detects_higher_ext():
    # S^2 Q^vee is outside the box on Gr_1(3) with m = 1; Hom(O, S^2 Q^vee) has H^1 contributions
    bad = gr.ext_on_total_space(1, 3, 1, "+", (), (2, 2), 1)
    assert any(p > 0 for t in bad.values() for p in t.degrees())


def test_kapranov_resolution_of_unit():
    cx = gr.kapranov_resolution(4, 2, gr.O())
    assert cx.degrees() == [0] and cx.terms[0] == [((0, 0, 0, 0), (0, 0), 1)]


@pytest.mark.parametrize("gamma", [(1,), (2,), (1, 1), (2, 1)])
def test_kapranov_resolution_leading_term(gamma):
    cx = gr.kapranov_resolution(4, 2, SchurBundle("Q", transpose(gamma)))
    low = cx.degrees()[0]
    assert low == -size(gamma) and cx.degrees()[-1] == 0
    assert [a for _, a, _ in cx.terms[low]] == [tuple(gamma) + (0,) * (2 - len(gamma))]


@pytest.mark.parametrize("mu", enumerate_box(2, 2))
def test_kapranov_conservation(mu):
    F = SchurBundle("Q", mu)
    cx = gr.kapranov_resolution(4, 2, F)
    assert cx.euler_rank() == gr.rank_of(4, 2, [F])
    for t in range(4):
        assert cx.twisted_euler(t) == gr.cohomology(4, 2, [F, gr.O(t)]).euler()


def test_mutation_labels():
    assert gr.mutate_label((1,), "left", "strict-below") == ("U", (1,), 1, 0)
    assert gr.mutate_label((), "left", "non-above") == ("U", (), 0, 0)
    assert gr.mutate_label((2, 1), "right", "strict-above") == ("U", (2, 1), 3, -1)
    with pytest.raises(ValueError):
        gr.mutate_label((1,), "left", "strict-above")


@pytest.mark.parametrize("gamma", enumerate_box(2, 2))
def test_mutation_round_trip(gamma):
    side, w, s1, o1 = gr.mutate_label(gamma, "right", "strict-above", "Q")
    back = gr.mutate_label(transpose(w), "left", "non-below", side)
    assert back[0] == "Q" and back[1] == gamma
    assert s1 + back[2] == 0 and o1 + back[3] == 0


def test_window_members_partition_box():
    box = set(enumerate_box(2, 2))
    below = set(gr.window_members((1,), 2, 2, "strict-below"))
    nonbelow = set(gr.window_members((1,), 2, 2, "non-below"))
    assert below == {()} and (1,) not in nonbelow
    assert below | nonbelow | {(1,)} == box


def test_span_member_is_in_span():
    spanning = gr.rank2_window(4, 1)
    assert gr.ktheory_span_check(4, 2, spanning, spanning[1]) == "InSpan"


def test_span_needs_three_trials():
    with pytest.raises(ValueError):
        gr.ktheory_span_check(4, 2, [gr.O()], gr.O(), trials=2)


def test_outside_window_is_not_in_span():
    V, _ = gr.lemma_window(4, 2, 1)
    assert gr.ktheory_span_check(4, 2, V, gr.O()) == "NotInSpan"


@pytest.mark.parametrize("n", [4, 5])
def test_window_span_rank(n):
    ell = n - 2
    for r in range(1, ell + 1):
        V, S = gr.lemma_window(n, 2, r)
        xs = gr.random_point(n, random.Random(r))
        want = sum(1 for lam in enumerate_box(ell, 2) if not in_box(lam, ell - r, 2))
        assert gr.span_rank(n, 2, V, xs) == gr.span_rank(n, 2, S, xs) == gr.span_rank(n, 2, V + S, xs) == want


def test_full_collection_spans_k_theory():
    xs = gr.random_point(5, random.Random(3))
    full = [SchurBundle("Q", lam, True) for lam in enumerate_box(3, 2)]
    assert gr.span_rank(5, 2, full, xs) == 10


@pytest.mark.parametrize("n", [4, 5])
def test_rank_two_probes_in_proved_range(n):
    for r in range(1, n - 1):
        for dual in (True, False):
            window = gr.rank2_window(n, r, dual)
            for (a, b), probe in gr.lemma_rank2_probes(n, r, dual):
                verdict = gr.ktheory_span_check(n, 2, window, probe, 3, seed=a + 7 * b)
                assert verdict == ("InSpan" if proved_probe(a, b, r) else "NotInSpan"), (n, r, a, b, dual)


@pytest.mark.parametrize("gamma", enumerate_box(2, 3))
def test_left_then_right_round_trip(gamma):
    side, w, s1, o1 = gr.mutate_label(gamma, "left", "strict-below", "Q")
    assert (side, w, s1) == ("U", transpose(gamma), size(gamma))
    back = gr.mutate_label(gamma, "right", "strict-below", "U")
    assert back == ("Q", gamma, -size(gamma), 0)
