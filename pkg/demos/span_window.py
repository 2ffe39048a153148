"""Which rank 2 probes lie in the mutation window, at the level of K-theory.

The stated probe range is 1 <= b <= a+r+1.  The table shows which probes are
actually in the span; the gap r+1 <= b <= a+1 comes out NotInSpan.

    python3 demos/span_window.py
"""

from quotcalc import grassmann as gr

for n in (4, 5):
    for r in range(1, n - 1):
        window = gr.rank2_window(n, r)
        print(f"Gr_2({n}), r={r}, window of {len(window)} bundles")
        for (a, b), probe in gr.lemma_rank2_probes(n, r):
            verdict = gr.ktheory_span_check(n, 2, window, probe, trials=3, seed=0)
            print(f"   a={a} b={b}: {verdict}")
