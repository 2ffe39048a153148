"""Derived Homs between Schur bundles on Grassmannians and related tools.

Bundles are described by ``SchurBundle`` labels: a Schur functor applied to
U, U^vee, Q or Q^vee, optionally twisted by O(t) = det Q.  Everything is
reduced to irreducible homogeneous bundles with the LR rule and then pushed
through Borel-Weil-Bott.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from sympy import Matrix
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from . import bbw as _bbw
from .partitions import check_weight, enumerate_box, fmt, in_box, negate, pad, preceq, shift, sign, size, transpose, trim
from .schur import cauchy_sym, normalize, schur_dim, tensor_many


@dataclass(frozen=True)
class SchurBundle:
    """Sigma^weight of U or Q (dualized if ``dual``), tensored with O(twist)."""

    side: str          # "U" or "Q"
    weight: tuple = ()
    dual: bool = False
    twist: int = 0

    def __post_init__(self):
        if self.side not in ("U", "Q"):
            raise ValueError(f"side must be U or Q, got {self.side!r}")
        object.__setattr__(self, "weight", check_weight(self.weight))

    def dualize(self):
        return SchurBundle(self.side, self.weight, not self.dual, -self.twist)

    def label(self):
        star = "^v" if self.dual else ""
        tw = f"(x)O({self.twist})" if self.twist else ""
        return f"S^{fmt(self.weight)}{self.side}{star}{tw}"


def O(t=0):
    return SchurBundle("Q", (), False, t)


def _dual_slot_weight(b, rank):
    """Weight of the dual-side slot for Sigma^w B (or Sigma^w B^vee)."""
    w = normalize(b.weight, rank)
    return w if b.dual else negate(w)


def decompose(n, k, factors):
    """Split a tensor product of SchurBundles into irreducibles.

    Returns ``{(a, b): mult}`` with a on U^vee (length k) and b on Q^vee
    (length n-k).
    """
    ell = n - k
    a_parts, b_parts, twist = [], [], 0
    for f in factors:
        twist += f.twist
        if f.side == "U":
            a_parts.append(_dual_slot_weight(f, k))
        else:
            b_parts.append(_dual_slot_weight(f, ell))
    a_exp = tensor_many(a_parts, k) if k else {(): 1}
    b_exp = tensor_many(b_parts, ell) if ell else {(): 1}
    out = {}
    for a, ma in a_exp.items():
        for b, mb in b_exp.items():
            # O(1) = det Q is the weight (-1,...,-1) on Q^vee
            key = (a, shift(b, -twist) if ell else b)
            out[key] = out.get(key, 0) + ma * mb
    return out


def rank_of(n, k, factors):
    return sum(m * schur_dim(a, k) * schur_dim(b, n - k) for (a, b), m in decompose(n, k, factors).items())


@dataclass
class ExtTable:
    """Cohomology graded by degree: ``{degree: {weight on V^vee: mult}}``."""

    n: int
    terms: dict = field(default_factory=dict)

    def add(self, degree, weight, mult=1):
        slot = self.terms.setdefault(degree, {})
        slot[weight] = slot.get(weight, 0) + mult

    def dims(self, n=None):
        n = self.n if n is None else n
        return {p: sum(m * schur_dim(w, n) for w, m in exp.items()) for p, exp in sorted(self.terms.items())}

    def euler(self):
        return sum(sign(p) * d for p, d in self.dims().items())

    def degrees(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def to_json(self):
        return {
            "degrees": [
                {"degree": p, "terms": [{"weight": list(w), "mult": m} for w, m in sorted(self.terms[p].items())]}
                for p in sorted(self.terms)
            ]
        }


def cohomology(n, k, factors, mult=1, table=None):
    """H^*(Gr_k(n), tensor of factors) as an ExtTable."""
    table = ExtTable(n) if table is None else table
    for (a, b), m in decompose(n, k, factors).items():
        res = _bbw.bbw_ab(n, k, a, b)
        if not res.vanishing:
            table.add(res.degree, res.weight, m * mult)
    return table


def ext_bundles(n, k, source, target):
    """Hom^*(source, target) = H^*(source^vee (x) target)."""
    src = source if isinstance(source, (list, tuple)) else [source]
    tgt = target if isinstance(target, (list, tuple)) else [target]
    return cohomology(n, k, [f.dualize() for f in src] + list(tgt))


def ext_schur(n, k, side, lam, mu, dual_flags=(False, False)):
    """Hom^* between Schur bundles of the chosen side.

    ``side`` is "Q", "U" or "mixed".  The mixed case is
    Hom^*(Sigma^lam Q, Sigma^mu U).  ``dual_flags`` dualizes source/target.
    """
    if side == "mixed":
        src = SchurBundle("Q", tuple(lam), dual_flags[0])
        tgt = SchurBundle("U", tuple(mu), dual_flags[1])
    elif side in ("Q", "U"):
        src = SchurBundle(side, tuple(lam), dual_flags[0])
        tgt = SchurBundle(side, tuple(mu), dual_flags[1])
    else:
        raise ValueError(f"unknown side {side!r}")
    rk_src = k if src.side == "U" else n - k
    rk_tgt = k if tgt.side == "U" else n - k
    if len(trim(src.weight)) > rk_src or len(trim(tgt.weight)) > rk_tgt:
        raise ValueError("weight has more rows than the bundle rank")
    return ext_bundles(n, k, src, tgt)


# --- total spaces -----------------------------------------------------------

def total_space_setup(m, n, d, side):
    """(N, K, coefficient rank) for the base Gr_K(N) of Z_+ or Z_-."""
    if side == "+":
        return n, d, m
    if side == "-":
        return m, d, n
    raise ValueError("side must be '+' or '-'")


def ext_on_total_space(m, n, d, side, lam, mu, cutoff):
    """Hom^*(Sigma^lam Q^vee, Sigma^mu Q^vee) on Z_+ or Z_-, by Sym-degree.

    Z_+ is the total space of W^vee (x) Q_+^vee over Gr_d(n) and Z_- that of
    V (x) Q_-^vee over Gr_d(m), so the pushforward of the structure sheaf is
    Sym(C (x) Q) with C of rank m resp. n.  Returns ``{s: ExtTable}``.
    """
    N, K, crank = total_space_setup(m, n, d, side)
    ell = N - K
    src = SchurBundle("Q", tuple(lam), True)
    tgt = SchurBundle("Q", tuple(mu), True)
    out = {}
    for s in range(cutoff + 1):
        table = ExtTable(N)
        for theta, _ in cauchy_sym(s, crank, ell):
            mult = schur_dim(theta, crank)
            cohomology(N, K, [src.dualize(), tgt, SchurBundle("Q", theta)], mult, table)
        out[s] = table
    return out


def tilting_generators(m, n, d, side):
    N, K, _ = total_space_setup(m, n, d, side)
    return enumerate_box(N - K, K)


def tilting_check(m, n, d, side, cutoff):
    """First (s, lam, mu, degree) with a positive-degree Ext, or None."""
    gens = tilting_generators(m, n, d, side)
    for lam in gens:
        for mu in gens:
            for s, table in ext_on_total_space(m, n, d, side, lam, mu, cutoff).items():
                bad = [p for p in table.degrees() if p > 0]
                if bad:
                    return (s, lam, mu, bad[0])
    return None


# --- Kapranov resolution ----------------------------------------------------

@dataclass
class KapranovComplex:
    """Terms V^p = sum of H^i(F (x) Sigma^(alpha^t) Q^vee) (x) Sigma^alpha U."""

    n: int
    k: int
    terms: dict = field(default_factory=dict)  # p -> list of (coeff weight on V^vee, alpha, mult)

    def rank(self, p):
        return sum(mult * schur_dim(w, self.n) * schur_dim(alpha, self.k) for w, alpha, mult in self.terms.get(p, []))

    def euler_rank(self):
        return sum(sign(p) * self.rank(p) for p in self.terms)

    def twisted_euler(self, t):
        """sum_p (-1)^p chi(V^p (x) O(t)), each term through bbw."""
        total = 0
        for p, items in self.terms.items():
            for w, alpha, mult in items:
                chi = cohomology(self.n, self.k, [SchurBundle("U", alpha, False, t)]).euler()
                total += sign(p) * mult * schur_dim(w, self.n) * chi
        return total

    def degrees(self):
        return sorted(self.terms)


def kapranov_resolution(n, k, factors):
    """Kapranov's resolution of a homogeneous bundle by the collection Sigma^alpha U."""
    factors = list(factors) if isinstance(factors, (list, tuple)) else [factors]
    cx = KapranovComplex(n, k)
    for alpha in enumerate_box(k, n - k):
        at = transpose(alpha)
        table = cohomology(n, k, factors + [SchurBundle("Q", at, True)])
        for i, exp in table.terms.items():
            p = i - size(alpha)
            for w, mult in sorted(exp.items()):
                cx.terms.setdefault(p, []).append((w, pad(alpha, k), mult))
    return cx


# --- mutation labels --------------------------------------------------------

_BELOW = ("strict-below", "non-above")
_ABOVE = ("strict-above", "non-below")


def mutate_label(gamma, direction, window, side="Q"):
    """Rewrite a Kapranov label under a mutation through a window of the box.

    Returns ``(side, weight, shift, omega_power)``: the image is
    Sigma^weight(side)[shift] (x) omega^omega_power.
    """
    gamma = trim(gamma)
    g = size(gamma)
    if side == "Q":
        if direction == "left" and window in _BELOW:
            return ("U", transpose(gamma), g, 0)
        if direction == "right" and window in _ABOVE:
            return ("U", transpose(gamma), g, -1)
    elif side == "U":
        # here ``gamma`` is the Q-side diagram; the U label is gamma^t
        if direction == "right" and window in _BELOW:
            return ("Q", gamma, -g, 0)
        if direction == "left" and window in _ABOVE:
            return ("Q", gamma, -g, 1)
    raise ValueError(f"no mutation rule for side={side}, direction={direction}, window={window}")


def window_members(gamma, ell, d, window):
    """Diagrams of B_{ell,d} in the named window relative to gamma."""
    out = []
    for a in enumerate_box(ell, d):
        below, above = preceq(a, gamma), preceq(gamma, a)
        keep = {
            "strict-below": below and a != trim(gamma),
            "non-above": not above,
            "strict-above": above and a != trim(gamma),
            "non-below": not below,
        }[window]
        if keep:
            out.append(a)
    return out


# --- K-theory shadows -------------------------------------------------------

def fixed_points(n, k):
    return list(combinations(range(n), k))


def character(n, k, factors, xs):
    """K-theory vector of a tensor product of SchurBundles at the point xs."""
    vec = []
    for S in fixed_points(n, k):
        comp = [i for i in range(n) if i not in S]
        val = Fraction(1)
        for f in factors:
            idx = S if f.side == "U" else comp
            vals = [Fraction(xs[i]) for i in idx]
            if f.dual:
                vals = [1 / v for v in vals]
            val *= schur_eval(f.weight, tuple(vals))
            detq = Fraction(1)
            for i in comp:
                detq *= xs[i]
            val *= detq ** f.twist
        vec.append(val)
    return tuple(vec)


@lru_cache(maxsize=None)
def schur_eval(weight, vals):
    """Schur polynomial s_weight at the point ``vals`` (exact, any integer weight)."""
    r = len(vals)
    if r == 0:
        return Fraction(1)
    w = normalize(weight, r)
    low = min(w)
    base = shift(w, -low)
    num = Matrix([[v ** (base[j] + r - 1 - j) for j in range(r)] for v in vals]).det(method="bareiss")
    den = Matrix([[v ** (r - 1 - j) for j in range(r)] for v in vals]).det(method="bareiss")
    q = num / den
    prod = Fraction(1)
    for v in vals:
        prod *= v
    return Fraction(int(q.p), int(q.q)) * prod ** low


def random_point(n, rng, bound=10 ** 6):
    while True:
        xs = [rng.randint(-bound, bound) for _ in range(n)]
        if 0 not in xs and len(set(xs)) == n and len({abs(x) for x in xs}) == n:
            return xs


def as_factors(item):
    return list(item) if isinstance(item, (list, tuple)) else [item]


def matrix_rank(rows):
    if not rows:
        return 0
    return DomainMatrix([[QQ(v.numerator, v.denominator) for v in row] for row in rows],
                        (len(rows), len(rows[0])), QQ).rank()


def span_rank(n, k, classes, xs):
    return matrix_rank([character(n, k, as_factors(c), xs) for c in classes])


def ktheory_span_check(n, k, spanning_set, probe, trials=3, seed=0):
    """Decide whether the probe class lies in the span of the spanning set.

    Membership is tested at ``trials`` random integer points; one failing
    trial is definitive.
    """
    if trials < 3:
        raise ValueError("at least 3 trials are required")
    rng = random.Random(seed)
    for _ in range(trials):
        xs = random_point(n, rng)
        rows = [character(n, k, as_factors(c), xs) for c in spanning_set]
        r0 = matrix_rank(rows)
        r1 = matrix_rank(rows + [character(n, k, as_factors(probe), xs)])
        if r1 > r0:
            return "NotInSpan"
    return "InSpan"


def lemma_window(n, d, r):
    """The two generating sets of the mutation window lemma on Gr_d(n).

    Returns (V, S): V = {Sigma^lam Q^vee}_{lam in B_{l,d} minus B_{l-r,d}},
    S = {Sigma^lam Q^vee (x) O(-t)}_{t in [1,r], lam in B_{l,d-1}}.
    """
    ell = n - d
    V = [SchurBundle("Q", lam, True) for lam in enumerate_box(ell, d) if not in_box(lam, ell - r, d)]
    S = [SchurBundle("Q", lam, True, -t) for t in range(1, r + 1) for lam in enumerate_box(ell, d - 1)]
    return V, S


def lemma_rank2_probes(n, r, dual=True):
    """Probes S^a U^vee (x) O(-b) (or S^a U (x) O(b)) on Gr_2(n)."""
    ell = n - 2
    out = []
    for a in range(ell + 1):
        for b in range(1, a + r + 2):
            if dual:
                out.append(((a, b), SchurBundle("U", (a,), True, -b)))
            else:
                out.append(((a, b), SchurBundle("U", (a,), False, b)))
    return out


def rank2_window(n, r, dual=True):
    ell = n - 2
    return [SchurBundle("Q", lam, dual) for lam in enumerate_box(ell, 2) if not in_box(lam, ell - r, 2)]
