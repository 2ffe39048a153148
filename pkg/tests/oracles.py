"""Independent brute-force oracles used across the test suite."""

from collections import Counter
from functools import lru_cache
from itertools import product

from quotcalc.partitions import trim


@lru_cache(maxsize=None)
def ssyt_contents(lam, n):
    """Counter of content vectors over all SSYT of shape lam with entries 1..n."""
    lam = trim(lam)
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]
    out = Counter()

    def rec(i, filling):
        if i == len(cells):
            cnt = [0] * n
            for v in filling.values():
                cnt[v - 1] += 1
            out[tuple(cnt)] += 1
            return
        r, c = cells[i]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            filling[(r, c)] = v
            rec(i + 1, filling)
        filling.pop((r, c), None)

    rec(0, {})
    return out


def ssyt_count(lam, n):
    return sum(ssyt_contents(tuple(lam), n).values())


def lr_by_peeling(lam, mu, n):
    """Decompose s_lam * s_mu in n variables by repeatedly removing the dominant monomial."""
    prod = Counter()
    for a, x in ssyt_contents(trim(lam), n).items():
        for b, y in ssyt_contents(trim(mu), n).items():
            prod[tuple(i + j for i, j in zip(a, b))] += x * y
    out = {}
    while prod:
        top = max((k for k, v in prod.items() if v), default=None)
        if top is None:
            break
        c = prod[top]
        out[top] = c
        for k, v in ssyt_contents(trim(top), n).items():
            prod[k] -= c * v
        prod = Counter({k: v for k, v in prod.items() if v})
    return out


def polys_box(ell, d):
    return [trim(t) for t in product(range(d, -1, -1), repeat=ell) if all(t[i] >= t[i + 1] for i in range(ell - 1))]
