"""Schur functor calculus for GL_n in characteristic zero.

Expansions are dicts ``{weight: multiplicity}`` whose keys are weights of
length exactly ``n``.  Tensor products are computed by enumerating
Littlewood-Richardson skew tableaux; rows beyond ``n`` are pruned while the
tableaux are being built.
"""

from functools import lru_cache
from itertools import combinations

from .partitions import check_partition, check_weight, enumerate_box, pad, shift, transpose, trim


def normalize(lam, n):
    """Return ``lam`` as a GL_n weight of length exactly n.

    Shorter partitions are padded with zeros.  Shorter weights with negative
    entries are ambiguous and rejected.
    """
    lam = check_weight(lam)
    if len(lam) == n:
        return lam
    if len(lam) < n:
        if lam and lam[-1] < 0:
            raise ValueError(f"weight {lam} is shorter than n={n} and has negative entries")
        return pad(lam, n)
    return pad(trim(lam), n)


def _horizontal_strips(kappa, k, limit):
    """Ways to add a horizontal strip of ``k`` boxes to ``kappa``.

    ``kappa`` has a fixed number of rows.  ``limit[r]`` bounds the number of
    boxes in rows 0..r together (the lattice-word condition); ``None`` means
    no bound.  Yields the tuple of row increments.
    """
    rows = len(kappa)
    out = []

    def rec(r, left, used, acc):
        if r == rows:
            if left == 0:
                out.append(tuple(acc))
            return
        cap = left if r == 0 else min(left, kappa[r - 1] - kappa[r])
        if limit is not None:
            cap = min(cap, limit[r] - used)
        for c in range(cap, -1, -1):
            acc.append(c)
            rec(r + 1, left - c, used + c, acc)
            acc.pop()

    rec(0, k, 0, [])
    return out


@lru_cache(maxsize=None)
def _lr(lam, mu, n):
    """LR expansion for partitions lam (length n) and mu."""
    states = {(lam, ()): 1}
    # each state: (current shape, per-row counts of the previous label)
    for i, k in enumerate(mu):
        new = {}
        for (kappa, prev), mult in states.items():
            if i == 0:
                limit = None
            else:
                # boxes labelled i+1 in rows <= r must not exceed
                # boxes labelled i in rows < r
                limit, acc = [], 0
                for r in range(n):
                    limit.append(acc)
                    acc += prev[r]
            for inc in _horizontal_strips(kappa, k, limit):
                nk = tuple(a + b for a, b in zip(kappa, inc))
                key = (nk, inc)
                new[key] = new.get(key, 0) + mult
        states = new
    result = {}
    for (kappa, _), mult in states.items():
        result[kappa] = result.get(kappa, 0) + mult
    return tuple(sorted(result.items()))


def lr_expand(lam, mu, n):
    """Decompose Sigma^lam (x) Sigma^mu over GL_n.

    ``lam`` may have negative entries; ``mu`` must be a partition.
    """
    if n < 1:
        raise ValueError("n must be positive")
    mu = trim(check_partition(mu))
    lam = normalize(lam, n)
    if len(mu) > n:
        return {}
    low = min(lam) if lam else 0
    base = shift(lam, -low)
    return {shift(nu, low): m for nu, m in _lr(base, mu, n)}


def tensor(lam, mu, n):
    """Decompose Sigma^lam (x) Sigma^mu for two arbitrary GL_n weights."""
    mu = normalize(mu, n)
    low = min(mu) if mu else 0
    out = lr_expand(lam, trim(shift(mu, -low)), n)
    return {shift(nu, low): m for nu, m in out.items()}


def tensor_many(weights, n):
    """Decompose a tensor product of several GL_n irreducibles."""
    acc = {normalize((), n): 1}
    for w in weights:
        new = {}
        for nu, m in acc.items():
            for rho, k in tensor(nu, w, n).items():
                new[rho] = new.get(rho, 0) + m * k
        acc = new
    return acc


def pieri_sym(lam, m, n):
    """Sigma^lam (x) S^m: add m boxes, no two in one column."""
    lam = normalize(check_partition(lam), n)
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = {}
    for inc in _horizontal_strips(lam, m, None):
        nu = tuple(a + b for a, b in zip(lam, inc))
        out[nu] = out.get(nu, 0) + 1
    return out


def pieri_ext(lam, m, n):
    """Sigma^lam (x) wedge^m: add m boxes, no two in one row."""
    lam = normalize(check_partition(lam), n)
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = {}
    for rows in combinations(range(n), m):
        nu = list(lam)
        for r in rows:
            nu[r] += 1
        if all(nu[i] >= nu[i + 1] for i in range(n - 1)):
            nu = tuple(nu)
            out[nu] = out.get(nu, 0) + 1
    return out


def cauchy_ext(m, p, q):
    """wedge^m(V (x) W) with rank V = p, rank W = q, as pairs (alpha, alpha^t)."""
    return [(a, transpose(a)) for a in enumerate_box(p, q) if sum(a) == m]


def cauchy_sym(m, p, q):
    """S^m(V (x) W) with rank V = p, rank W = q, as pairs (alpha, alpha)."""
    r = min(p, q)
    return [(a, a) for a in enumerate_box(r, m) if sum(a) == m]


def schur_dim(lam, n):
    """Weyl dimension of the GL_n irreducible with highest weight lam."""
    lam = normalize(lam, n)
    num, den = 1, 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


def expansion_dim(exp, n):
    return sum(m * schur_dim(nu, n) for nu, m in exp.items())
