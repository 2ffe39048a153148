"""Catalog of semiorthogonal decompositions at integer parameters.

Each entry lists its components in a valid order, the declared
semiorthogonal pairs, and the Serre twist.  A declared pair ``(a, b)``
means component a lies in the right orthogonal of b, so a may come
before b.  If both (a, b) and (b, a) are declared the two are totally
orthogonal.  Each component records the local rank C(m, d_-), where d_-
is the rank of the Quot stratum it comes from.  These ranks add up to
the ambient count C(n, d_+).

Global hypotheses (Tor independence, expected dimension) are kept as
text in ``preconditions`` and never evaluated.
"""

import heapq
from dataclasses import dataclass, field, replace
from graphlib import CycleError, TopologicalSorter
from math import comb

from .partitions import (BoxOrder, enumerate_box, fmt, pad, preceq, shift, transpose, trim)


@dataclass(frozen=True)
class SodComponent:
    functor: str          # Phi, Psi, Omega ... with an optional stratum tag
    source: str           # what it embeds: X, Z, Spec k, Quot_j(K), P(K)
    d_minus: int          # rank of the source Quot stratum in the local model
    twist: int            # power of O_+(1)
    rank: int             # C(m, d_minus)
    schur_label: tuple = None

    def label(self):
        s = f"{self.functor}_{self.twist}"
        if self.schur_label is not None:
            s = f"{self.functor}^{fmt(self.schur_label)}_{self.twist}"
        return s


@dataclass
class SodCatalogEntry:
    theorem: str
    params: dict
    local_model: tuple            # (m, n, d_+)
    components: list
    pairs: set                    # (i, j): components[i] before components[j]
    serre_shift: int = None       # Serre functor sends twist k to k - serre_shift
    order_complete: bool = True   # every listed pair must be declared
    preconditions: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def delta(self):
        m, n, _ = self.local_model
        return n - m

    def to_json(self):
        return {
            "theorem": self.theorem,
            "params": dict(sorted(self.params.items())),
            "local_model": {"m": self.local_model[0], "n": self.local_model[1],
                            "d_plus": self.local_model[2]},
            "components": [{"label": c.label(), "functor": c.functor, "source": c.source,
                            "d_minus": c.d_minus, "twist": c.twist, "rank": c.rank,
                            "schur_label": None if c.schur_label is None else list(c.schur_label)}
                           for c in self.components],
            "pairs": sorted([list(p) for p in self.pairs]),
            "serre_shift": self.serre_shift,
            "preconditions": list(self.preconditions),
            "notes": list(self.notes),
        }

    def to_latex(self):
        inner = ", ".join(_latex_label(c) for c in self.components)
        return r"\langle " + inner + r" \rangle"


def _latex_label(c):
    name = {"Phi": r"\Phi", "Psi": r"\Psi", "Omega": r"\Omega"}
    base, _, tag = c.functor.partition("^")
    head = name.get(base, base)
    sup = tag
    if c.schur_label is not None:
        sup = fmt(c.schur_label)
    up = f"^{{{sup}}}" if sup else ""
    return rf"\mathrm{{Im}}\,{head}{up}_{{{c.twist}}}"


def _comp(functor, source, d_minus, twist, m, schur_label=None):
    return SodComponent(functor, source, d_minus, twist, comb(m, d_minus), schur_label)


def _quot_source(j):
    return f"Quot_{j}(K)"


class _Builder:
    """Collects components with rule-based pairs, then orders them."""

    def __init__(self):
        self.items = []
        self.before = set()

    def add(self, comp):
        self.items.append(comp)
        return len(self.items) - 1

    def declare(self, a, b):
        if a != b:
            self.before.add((a, b))

    def build(self, linearize=False):
        """Return (components, pairs) with indices in listed order."""
        order = list(range(len(self.items)))
        if linearize:
            order = linear_extension(len(self.items), self.before)
        pos = {old: new for new, old in enumerate(order)}
        comps = [self.items[i] for i in order]
        pairs = {(pos[a], pos[b]) for a, b in self.before}
        return comps, pairs


def strict_pairs(pairs):
    return {(a, b) for a, b in pairs if (b, a) not in pairs}


def linear_extension(count, pairs):
    """Topological order of the strict pairs, breaking ties by index."""
    ts = TopologicalSorter()
    for i in range(count):
        ts.add(i)
    for a, b in strict_pairs(pairs):
        ts.add(b, a)
    ts.prepare()   # raises CycleError
    heap, out = [], []
    while ts.is_active():
        for node in ts.get_ready():
            heapq.heappush(heap, node)
        node = heapq.heappop(heap)
        out.append(node)
        ts.done(node)
    return out


def _require(cond, msg):
    if not cond:
        raise ValueError(msg)


# Entries -------------------------------------------------------------------

def _projectivization(m, n, k=0):
    delta = n - m
    _require(m >= 1 and delta >= 1, "projectivization needs m >= 1 and delta = n - m >= 1")
    b = _Builder()
    phi = b.add(_comp("Phi", "P(K)", 1, k, m))
    psis = [b.add(_comp("Psi", "X", 0, k + i, m)) for i in range(1, delta + 1)]
    chain = [phi] + psis
    for i, a in enumerate(chain):
        for c in chain[i + 1:]:
            b.declare(a, c)
    comps, pairs = b.build()
    return SodCatalogEntry("projectivization", {"m": m, "n": n, "k": k}, (m, n, 1),
                           comps, pairs, delta,
                           preconditions=["Tor-independence for (d_+, d_-) = (1, 1)"])


def _standard_flip(m, n, k=0):
    delta = n - m
    _require(m >= 1 and delta >= 1, "standard flip needs m >= 1 and delta >= 1")
    b = _Builder()
    chain = [b.add(_comp("Psi", "Spec k", m, k - t, m)) for t in range(delta, 0, -1)]
    chain.append(b.add(_comp("Phi", _quot_source(m - 1), m - 1, k, m)))
    for i, a in enumerate(chain):
        for c in chain[i + 1:]:
            b.declare(a, c)
    comps, pairs = b.build()
    return SodCatalogEntry("standard-flip", {"m": m, "n": n, "k": k}, (m, n, n - 1),
                           comps, pairs, delta)


def _pirozhkov(n, d, k=0):
    ell = n - d
    _require(d >= 1 and n - 1 >= d, "rank one case needs 1 <= d <= n - 1")
    b = _Builder()
    psi = []
    for beta in enumerate_box(ell, d - 1, BoxOrder.TOTAL_OPPOSITE):
        lab = trim(shift(pad(beta, ell), 1))
        psi.append((beta, b.add(_comp("Psi", "Spec k", 1, k, 1, lab))))
    phi = []
    for alpha in enumerate_box(ell - 1, d, BoxOrder.TOTAL):
        phi.append((alpha, b.add(_comp("Phi", "X", 0, k, 1, alpha))))
    for a_lab, a in psi:
        for b_lab, c in psi:
            if a != c and not preceq(a_lab, b_lab):
                b.declare(a, c)
        for _, c in phi:
            b.declare(a, c)
    for a_lab, a in phi:
        for b_lab, c in phi:
            if a != c and not preceq(b_lab, a_lab):
                b.declare(a, c)
    comps, pairs = b.build()
    return SodCatalogEntry("pirozhkov", {"n": n, "d": d, "k": k}, (1, n, d), comps, pairs, n - 1,
                           notes=["Psi labels are beta + 1, a full column added to beta"])


_DELTA_LISTINGS = {
    1: [(0, 0), (1, 1)],
    2: [(0, -1), (1, 0), (1, 1), (2, 2)],
    3: [(0, -1), (1, 0), (2, 1), (1, 1), (2, 2), (1, 2), (2, 3), (3, 4)],
}


def _small_delta(delta, m, d, k=0):
    """delta = 1, 2, 3: strata d_- = d - p, listed as in the theorems."""
    _require(delta <= d <= m, f"delta={delta} case needs {delta} <= d <= m")
    n = m + delta
    tags = {0: "vf", delta: "flip"}
    b = _Builder()
    idx = []
    for p, off in _DELTA_LISTINGS[delta]:
        tag = tags.get(p, f"({d - p})" if delta == 3 else "mid")
        comp = _comp(f"Phi^{tag}", _quot_source(d - p), d - p, k + off, m)
        idx.append((p, k + off, b.add(comp)))
    for p, i, a in idx:
        for q, j, c in idx:
            if a == c:
                continue
            t = j - i
            if p == q and 1 <= t <= delta - 1:
                b.declare(a, c)
            elif p < q and 1 <= t <= delta + q - p - 1:
                b.declare(a, c)
            elif p > q and 1 <= delta - t <= delta + p - q - 1:
                # stratum p before stratum q < p when j = i + delta - t
                b.declare(a, c)
    comps, pairs = b.build()
    entry = SodCatalogEntry(f"delta{delta}", {"m": m, "d": d, "k": k}, (m, n, d), comps, pairs, delta)
    if delta == 1:
        entry.notes.append("mutation-equivalent order: flip stratum first, then vf")
    return entry


def _quot2(m, n, k=0):
    delta = n - m
    _require(m >= 2 and delta >= 2, "Quot_2 formula needs m >= 2 and delta >= 2")
    b = _Builder()
    omega = b.add(_comp("Omega", _quot_source(2), 2, k - 1, m))
    phis = [(i, b.add(_comp("Phi", _quot_source(1), 1, k + i, m))) for i in range(delta)]
    psis = []
    for alpha in enumerate_box(delta - 2, 2):
        at = pad(transpose(alpha), 2)
        psis.append((alpha, at[0] - at[1], at[1], b.add(_comp("Psi", "X", 0, k + 1, m, alpha))))
    for _, c in phis:
        b.declare(omega, c)
    for *_, c in psis:
        b.declare(omega, c)
    for i, a in phis:
        for j, c in phis:
            if i < j <= i + delta - 1:
                b.declare(a, c)
        for _, aa, bb, c in psis:
            if i <= aa + bb:       # (alpha^t + 1)^t not inside (2^i)
                b.declare(a, c)
    for alpha, aa, bb, a in psis:
        for i, c in phis:
            if bb + 1 <= i:        # (2^i) not inside alpha
                b.declare(a, c)
        for beta, *_, c in psis:
            if a != c and not preceq(beta, alpha):
                b.declare(a, c)
    comps, pairs = b.build(linearize=True)
    return SodCatalogEntry("quot2", {"m": m, "n": n, "k": k}, (m, n, 2), comps, pairs, delta,
                           preconditions=["Tor-independence for (2, d_-), d_- = 0, 1, 2"],
                           notes=["alpha + 1 read as (alpha^t + 1)^t, i.e. i <= a + b"])


def _ell2(m, n, k=0):
    delta = n - m
    _require(m >= 2 and delta >= 2, "l_+ = 2 case needs m >= 2 and delta >= 2")
    b = _Builder()
    psis = []
    for alpha in enumerate_box(2, delta - 2):
        ap = pad(alpha, 2)
        psis.append((alpha, ap[0] - ap[1], ap[1], b.add(_comp("Psi", "Spec k", m, k - 1, m, alpha))))
    phis = [(i, b.add(_comp("Phi", _quot_source(m - 1), m - 1, k - i, m))) for i in range(delta)]
    omega = b.add(_comp("Omega", _quot_source(m - 2), m - 2, k + 1, m))
    # A in ^perp(B) puts B before A.
    for _, c in phis:
        b.declare(c, omega)
    for *_, c in psis:
        b.declare(c, omega)
    for i, a in phis:
        for j, c in phis:
            if i < j <= i + delta - 1:
                b.declare(c, a)
        for _, aa, bb, c in psis:
            if i <= aa + bb:       # alpha + 1 not inside (i, i)
                b.declare(c, a)
    for alpha, aa, bb, a in psis:
        for i, c in phis:
            if i > bb:             # (i, i) not inside alpha
                b.declare(c, a)
        for beta, *_, c in psis:
            if a != c and not preceq(beta, alpha):
                b.declare(c, a)
    comps, pairs = b.build(linearize=True)
    return SodCatalogEntry("ell2", {"m": m, "n": n, "k": k}, (m, n, n - 2), comps, pairs, delta)


def _blowup(r, ell, k=0):
    _require(r >= 2 and 0 <= ell <= r - 1, "blowup needs r >= 2 and 0 <= l <= r - 1")
    b = _Builder()
    chain = [b.add(_comp("Psi", "Z", 1, k + t, 1)) for t in range(1 - r + ell, 0)]
    chain.append(b.add(_comp("Phi", "X", 0, k, 1)))
    chain += [b.add(_comp("Psi", "Z", 1, k + t, 1)) for t in range(ell)]
    for i, a in enumerate(chain):
        for c in chain[i + 1:]:
            b.declare(a, c)
    comps, pairs = b.build()
    return SodCatalogEntry("blowup", {"r": r, "ell": ell, "k": k}, (1, r, r - 1), comps, pairs, r - 1,
                           preconditions=["Z Koszul-regularly immersed of codimension r"])


def _cayley(n, ell, k=0):
    _require(n >= 2 and 0 <= ell <= n - 1, "Cayley trick needs n >= 2 and 0 <= l <= n - 1")
    b = _Builder()
    # Twisted copies come from X and the single copy from Z.
    chain = [b.add(_comp("Phi", "X", 0, k + t, 1)) for t in range(2 - n + ell, 1)]
    chain.append(b.add(_comp("Psi", "Z", 1, k, 1)))
    chain += [b.add(_comp("Phi", "X", 0, k + t, 1)) for t in range(1, ell + 1)]
    for i, a in enumerate(chain):
        for c in chain[i + 1:]:
            b.declare(a, c)
    comps, pairs = b.build()
    return SodCatalogEntry("cayley", {"n": n, "ell": ell, "k": k}, (1, n, 1), comps, pairs, n - 1,
                           preconditions=["Z has the expected codimension n"],
                           notes=["sources follow the exceptional sequence O(k+1)..O(k+n-1) from X"])


def _projective_bundle(r, k=0):
    _require(r >= 0, "projective bundle needs r >= 0")
    b = _Builder()
    chain = [b.add(_comp("O", "S", 0, k + t, 0)) for t in range(r + 1)]
    for i, a in enumerate(chain):
        for c in chain[i + 1:]:
            b.declare(a, c)
    comps, pairs = b.build()
    return SodCatalogEntry("projective-bundle", {"r": r, "k": k}, (0, r + 1, 1), comps, pairs, r + 1)


def _flop(m, d, k=0):
    _require(0 <= d <= m, "flop needs 0 <= d <= m")
    comps = [_comp("Phi", _quot_source(d), d, k, m)]
    return SodCatalogEntry("flop", {"m": m, "d": d, "k": k}, (m, m, d), comps, set(), 0,
                           notes=["delta = 0: the correspondence is an equivalence"])


def _conjecture(m, n, d, k=0):
    delta = n - m
    _require(0 <= m <= n and 0 <= d <= n, "conjecture template needs 0 <= m <= n, 0 <= d <= n")
    comps = []
    for i in range(min(d, delta) + 1):
        if not 0 <= d - i <= m:
            continue
        for alpha in enumerate_box(i, delta - i):
            comps.append(SodComponent(f"Phi^({i})", _quot_source(d - i), d - i, k,
                                      comb(m, d - i), alpha))
    return SodCatalogEntry("conjecture", {"m": m, "n": n, "d": d, "k": k}, (m, n, d), comps, set(),
                           None, order_complete=False,
                           notes=["Fourier-Mukai kernels undetermined; counts, twists and labels only"])


THEOREMS = {
    "projectivization": _projectivization,
    "standard-flip": _standard_flip,
    "pirozhkov": _pirozhkov,
    "delta1": lambda m, d, k=0: _small_delta(1, m, d, k),
    "delta2": lambda m, d, k=0: _small_delta(2, m, d, k),
    "delta3": lambda m, d, k=0: _small_delta(3, m, d, k),
    "quot2": _quot2,
    "ell2": _ell2,
    "blowup": _blowup,
    "cayley": _cayley,
    "projective-bundle": _projective_bundle,
    "flop": _flop,
    "conjecture": _conjecture,
}

PARAMS = {
    "projectivization": ("m", "n"),
    "standard-flip": ("m", "n"),
    "pirozhkov": ("n", "d"),
    "delta1": ("m", "d"),
    "delta2": ("m", "d"),
    "delta3": ("m", "d"),
    "quot2": ("m", "n"),
    "ell2": ("m", "n"),
    "blowup": ("r", "ell"),
    "cayley": ("n", "ell"),
    "projective-bundle": ("r",),
    "flop": ("m", "d"),
    "conjecture": ("m", "n", "d"),
}


def catalog(theorem, **params):
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; known: {', '.join(sorted(THEOREMS))}")
    return THEOREMS[theorem](**params)


def expected_count(theorem, **p):
    """Component counts as quoted in the statements."""
    if theorem in ("projectivization", "standard-flip"):
        return 1 + (p["n"] - p["m"])
    if theorem == "pirozhkov":
        ell, d = p["n"] - p["d"], p["d"]
        return comb(ell + d - 1, d - 1) + comb(ell + d - 1, d)
    if theorem.startswith("delta"):
        return 2 ** int(theorem[5:])
    if theorem in ("quot2", "ell2"):
        delta = p["n"] - p["m"]
        return 1 + delta + comb(delta, 2)
    if theorem == "blowup":
        return p["r"]
    if theorem == "cayley":
        return p["n"]
    if theorem == "projective-bundle":
        return p["r"] + 1
    if theorem == "flop":
        return 1
    if theorem == "conjecture":
        m, n, d = p["m"], p["n"], p["d"]
        delta = n - m
        return sum(comb(delta, i) for i in range(min(d, delta) + 1) if 0 <= d - i <= m)
    raise ValueError(theorem)


def order_check(entry):
    """Declared pairs acyclic, listing extends them, and (if complete) covers every listed pair."""
    return order_failure(entry) is None


def order_failure(entry):
    count = len(entry.components)
    for a, b in entry.pairs:
        if not (0 <= a < count and 0 <= b < count) or a == b:
            return f"bad pair {(a, b)}"
    try:
        linear_extension(count, entry.pairs)
    except CycleError as exc:
        return f"cycle in declared order: {exc.args[1]}"
    for a, b in strict_pairs(entry.pairs):
        if a > b:
            return f"listing puts {entry.components[b].label()} before {entry.components[a].label()}"
    if entry.order_complete:
        for a in range(count):
            for b in range(a + 1, count):
                if (a, b) not in entry.pairs:
                    return (f"{entry.components[a].label()} listed before "
                            f"{entry.components[b].label()} without a declared relation")
    return None


def rank_check(entry):
    m, n, dp = entry.local_model
    ambient = comb(n, dp)
    total = sum(c.rank for c in entry.components)
    return ambient, total, ambient == total


def vandermonde_check(m, n, d):
    delta = n - m
    return comb(n, d) == sum(comb(delta, i) * comb(m, d - i) for i in range(d + 1) if d - i <= m)


def serre_orbit(entry, component):
    if entry.serre_shift is None:
        raise ValueError(f"{entry.theorem} has no Serre twist rule")
    if component not in entry.components:
        raise ValueError(f"{component.label()} is not a component of {entry.theorem}")
    return replace(component, twist=component.twist - entry.serre_shift)


def serre_bijective(entry):
    """Serre images of entry(k) are exactly the components of entry(k - shift)."""
    params = dict(entry.params)
    params["k"] = params.get("k", 0) - entry.serre_shift
    shifted = catalog(entry.theorem, **params)
    images = [serre_orbit(entry, c) for c in entry.components]
    return len(set(images)) == len(images) and set(images) == set(shifted.components)


def parameter_grid(theorem, bound=6):
    """Valid parameter dicts with every parameter at most ``bound``."""
    names = PARAMS[theorem]
    out = []

    def rec(i, acc):
        if i == len(names):
            try:
                THEOREMS[theorem](**acc)
            except ValueError:
                return
            out.append(dict(acc))
            return
        for v in range(bound + 1):
            acc[names[i]] = v
            rec(i + 1, acc)
        del acc[names[i]]

    rec(0, {})
    return out


def check_entry(entry):
    """All catalog checks on one entry; returns None or a failure message."""
    p = {k: v for k, v in entry.params.items() if k != "k"}
    want = expected_count(entry.theorem, **p)
    if len(entry.components) != want:
        return f"{entry.theorem} {p}: {len(entry.components)} components, expected {want}"
    if len(set(entry.components)) != len(entry.components):
        return f"{entry.theorem} {p}: repeated component"
    fail = order_failure(entry)
    if fail:
        return f"{entry.theorem} {p}: {fail}"
    ambient, total, ok = rank_check(entry)
    if not ok:
        return f"{entry.theorem} {p}: ambient rank {ambient} != {total}"
    if entry.serre_shift is not None and not serre_bijective(entry):
        return f"{entry.theorem} {p}: Serre orbit is not a bijection"
    return None
