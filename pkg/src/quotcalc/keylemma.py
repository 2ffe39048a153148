"""Lascoux-type resolutions for the correspondence between two local Quot models.

Notation: W has rank m and V has rank n.  The minus side lives over
G_- = Gr_{d_-}(W), with U_- inside W and the quotient Q_- of rank
l_- = m - d_-.  The plus side carries Q_+ of rank l_+ = n - d_+.

Pulling Sigma^alpha Q_-^vee back and pushing it forward gives a complex
whose terms are H^l(G_-, Sigma^alpha Q_-^vee (x) Sigma^{gamma^t} U_-)
(x) Sigma^gamma Q_+, with the term in degree l - |gamma|.  Only terms are
produced here.  The differentials are fixed only up to homotopy.

Coefficient spaces are stored as GL(W) weights of length m.  BBW on
Gr_{d_-}(W) returns weights on W^vee, so they are negated on the way in.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .bbw import bbw_ab
from .partitions import (check_partition, enumerate_box, fmt, in_box, negate, pad,
                         sign, size, transpose, trim)
from .schur import schur_dim


@dataclass(frozen=True)
class KeyLemmaInput:
    m: int
    n: int
    d_plus: int
    d_minus: int
    alpha: tuple = ()
    # The lemma itself only needs l_- <= l_+.  The sweep also assumes
    # d_- <= d_+; the Lascoux specialisation (d_+ = 0) turns that off.
    require_d_order: bool = True

    def __post_init__(self):
        m, n, dp, dm = self.m, self.n, self.d_plus, self.d_minus
        if m < 0 or n < 0:
            raise ValueError("ranks must be nonnegative")
        if not (0 <= dm <= m and 0 <= dp <= n):
            raise ValueError(f"need 0 <= d_- <= m and 0 <= d_+ <= n, got {self}")
        if self.require_d_order and dm > dp:
            raise ValueError(f"need d_- <= d_+, got d_-={dm}, d_+={dp}")
        if m - dm > n - dp:
            raise ValueError(f"need l_- <= l_+, got l_-={m - dm}, l_+={n - dp}")
        alpha = trim(check_partition(self.alpha))
        if not in_box(alpha, m - dm, dm):
            raise ValueError(f"alpha={alpha} does not fit in B_{{{m - dm},{dm}}}")
        object.__setattr__(self, "alpha", alpha)

    @property
    def ell_plus(self):
        return self.n - self.d_plus

    @property
    def ell_minus(self):
        return self.m - self.d_minus

    @property
    def delta(self):
        return self.n - self.m

    @property
    def gap(self):
        """l_+ - l_-."""
        return self.ell_plus - self.ell_minus


@dataclass(frozen=True)
class GammaDatum:
    gamma: tuple
    x: int
    y: int
    tau: tuple
    theta: tuple
    rows: tuple      # the chosen rows j_1 < ... < j_y of alpha^t, 1-based
    ell: int         # cohomological degree on G_-
    p: int           # position in the complex
    z: int = 0       # twisted case only
    xi: tuple = ()


class GradedComplex:
    """Terms of a complex, ``{p: {(coeff, bundle): mult}}``.

    ``coeff`` is a GL(m) weight on ``coeff_space`` ("W" or "W^vee") and
    ``bundle`` a partition for Sigma^bundle on ``bundle_space``
    ("Q+" or "Q+^vee").
    """

    def __init__(self, m, ell_plus, coeff_space="W", bundle_space="Q+", terms=None):
        self.m = m
        self.ell_plus = ell_plus
        self.coeff_space = coeff_space
        self.bundle_space = bundle_space
        self.terms = {}
        for p, summands in (terms or {}).items():
            for (coeff, bundle), mult in summands.items():
                self.add(p, coeff, bundle, mult)

    def add(self, p, coeff, bundle, mult=1):
        slot = self.terms.setdefault(p, {})
        key = (tuple(coeff), trim(bundle))
        slot[key] = slot.get(key, 0) + mult

    def degrees(self):
        return sorted(self.terms)

    def summands(self, p):
        return sorted(self.terms.get(p, {}).items())

    def rank(self, p):
        return sum(mult * schur_dim(c, self.m) * schur_dim(b, self.ell_plus)
                   for (c, b), mult in self.terms.get(p, {}).items())

    def euler_rank(self):
        return sum(sign(p) * self.rank(p) for p in self.terms)

    def dual(self):
        flip = {"W": "W^vee", "W^vee": "W", "Q+": "Q+^vee", "Q+^vee": "Q+"}
        return GradedComplex(self.m, self.ell_plus, flip[self.coeff_space],
                             flip[self.bundle_space],
                             {-p: dict(s) for p, s in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GradedComplex):
            return NotImplemented
        return (self.m, self.ell_plus, self.coeff_space, self.bundle_space, self.terms) == \
            (other.m, other.ell_plus, other.coeff_space, other.bundle_space, other.terms)

    def __repr__(self):
        return f"GradedComplex({self.coeff_space}, {self.bundle_space}, {self.terms})"

    def to_json(self):
        degrees = []
        for p in sorted(self.terms, reverse=True):
            summands = [{"coeff": list(c), "coeff_space": self.coeff_space,
                         "bundle": list(b), "bundle_space": self.bundle_space, "mult": mult}
                        for (c, b), mult in self.summands(p)]
            degrees.append({"p": p, "summands": summands})
        return {"degrees": degrees}

    def to_latex(self):
        w = "W" if self.coeff_space == "W" else r"W^\vee"
        q = r"\mathcal{Q}_+" if self.bundle_space == "Q+" else r"\mathcal{Q}_+^\vee"
        lines = []
        for p in sorted(self.terms, reverse=True):
            parts = []
            for (c, b), mult in self.summands(p):
                coeff = "" if not any(c) else rf"\Sigma^{{{fmt(c)}}}{w} \otimes "
                bund = r"\mathcal{O}" if not b else rf"\Sigma^{{{fmt(b)}}}{q}"
                parts.append((f"{mult} " if mult > 1 else "") + coeff + bund)
            lines.append(rf"F^{{{p}}} &= " + r" \oplus ".join(parts) + r" \\")
        return "\\begin{align*}\n" + "\n".join(lines) + "\n\\end{align*}"


def _coefficient(kin, gamma, twist=0):
    """BBW on G_- for Sigma^alpha Q_-^vee (x) O(twist) (x) Sigma^{gamma^t} U_-."""
    dm, lm = kin.d_minus, kin.ell_minus
    a = negate(pad(transpose(gamma), dm))
    b = tuple(x - twist for x in pad(kin.alpha, lm))
    return bbw_ab(kin.m, dm, a, b)


def _place(kin, complex_, gamma, twist=0):
    res = _coefficient(kin, gamma, twist)
    if res.vanishing:
        return None
    p = res.degree - size(gamma)
    complex_.add(p, negate(res.weight), gamma)
    return res.degree, p


def _new_complex(kin):
    return GradedComplex(kin.m, kin.ell_plus, "W", "Q+")


def brute_force_complex(kin, twist=0):
    """Run BBW over every gamma in B_{l_+, d_-}; the oracle for the structured engine."""
    out = _new_complex(kin)
    for gamma in enumerate_box(kin.ell_plus, kin.d_minus):
        _place(kin, out, gamma, twist)
    return out


def enumerate_B_alpha(kin):
    """The structured index set B(alpha), one datum per (x, tau, theta, rows)."""
    gap, dm, lm = kin.gap, kin.d_minus, kin.ell_minus
    at = pad(transpose(kin.alpha), dm)
    out = []
    for x in range(min(gap, dm) + 1):
        y = dm - x
        for tau in enumerate_box(x, gap - x):
            tau_p = pad(tau, x)
            for rows in combinations(range(1, dm + 1), y):
                theta = tuple(x + s - j for s, j in enumerate(rows, 1))
                gt = tuple(lm + x + t for t in tau_p) + \
                    tuple(x + s - j + at[j - 1] for s, j in enumerate(rows, 1))
                gamma = transpose(trim(gt))
                ell = lm * x + sum(at[j - 1] for j in rows)
                p = -x * x - size(tau) - size(theta)
                out.append(GammaDatum(gamma, x, y, trim(tau_p), trim(theta), rows, ell, p))
    return out


def key_complex_F(kin):
    """F^p = sum over B(alpha) of H^{l}(G_-, ...) (x) Sigma^gamma Q_+ in degree p(gamma)."""
    out = _new_complex(kin)
    for datum in enumerate_B_alpha(kin):
        res = _coefficient(kin, datum.gamma)
        if res.vanishing or res.degree != datum.ell:
            raise AssertionError(f"structured datum disagrees with BBW: {datum}, {res}")
        out.add(datum.p, negate(res.weight), datum.gamma)
    return out


def key_complex_G(kin):
    """G^p is the dual of F^{-p}: coefficients on W^vee, bundles Sigma^gamma Q_+^vee."""
    return key_complex_F(kin).dual()


def key_collapse(kin, alpha_plus, variant="pushforward"):
    """Image of Sigma^a Q_+^vee under r_-* r_+^* (or of Sigma^a Q_+ under r_-! r_+^*).

    Returns ``None`` for zero, else ``(space, alpha)`` with space "Q-" or "Q-^vee".
    """
    alpha_plus = trim(check_partition(alpha_plus))
    if not in_box(alpha_plus, kin.ell_plus, kin.d_plus):
        raise ValueError(f"{alpha_plus} not in B_{{{kin.ell_plus},{kin.d_plus}}}")
    if variant not in ("pushforward", "shriek"):
        raise ValueError(f"unknown variant {variant!r}")
    if not in_box(alpha_plus, kin.ell_minus, kin.d_plus):
        return None
    return ("Q-" if variant == "pushforward" else "Q-^vee", alpha_plus)


def enumerate_B_alpha_twisted(kin, j):
    """Index set for Sigma^alpha Q_-^vee (x) O_-(j), three-block shape.

    Here theta_s = x + z + s - j_s lies in B_{y, x+z} and xi in B_{z, j-z}.
    """
    gap, dm, lm = kin.gap, kin.d_minus, kin.ell_minus
    if not 0 <= j <= gap:
        raise ValueError(f"twist j={j} outside [0, {gap}]")
    at = pad(transpose(kin.alpha), dm)
    out = []
    for x in range(min(gap - j, dm) + 1):
        for z in range(min(j, dm - x) + 1):
            y = dm - x - z
            for tau in enumerate_box(x, gap - j - x):
                tau_p = pad(tau, x)
                for rows in combinations(range(1, dm + 1), y):
                    for xi in enumerate_box(z, j - z):
                        xi_p = pad(xi, z)
                        gt = tuple(j + lm + x + t for t in tau_p) + \
                            tuple(j + x + s - r + at[r - 1] for s, r in enumerate(rows, 1)) + xi_p
                        gamma = transpose(trim(gt))
                        theta = tuple(x + z + s - r for s, r in enumerate(rows, 1))
                        ell = lm * x + sum(at[r - 1] for r in rows)
                        p = twisted_degree(x, y, z, j, tau, theta, xi)
                        out.append(GammaDatum(gamma, x, y, trim(tau_p), trim(theta), rows,
                                              ell, p, z, trim(xi_p)))
    return out


def twisted_degree(x, y, z, j, tau, theta, xi):
    """p = -x^2 - j(x+y) - |tau| - |theta| - |xi| + yz.

    The yz term compensates for theta being measured from x+z rather than x.
    """
    return -x * x - j * (x + y) - size(tau) - size(theta) - size(xi) + y * z


def twisted_complex(kin, j):
    out = _new_complex(kin)
    for datum in enumerate_B_alpha_twisted(kin, j):
        res = _coefficient(kin, datum.gamma, j)
        if res.vanishing or res.degree != datum.ell:
            raise AssertionError(f"twisted datum disagrees with BBW: {datum}, {res}")
        out.add(datum.p, negate(res.weight), datum.gamma)
    return out


def distinguished_twisted_gamma(alpha, j, d_minus):
    """(alpha^t + j)^t, the gamma of the x = z = 0 datum."""
    at = pad(transpose(trim(alpha)), d_minus)
    return transpose(trim(tuple(t + j for t in at)))


def lascoux_resolution(m, n, ell_minus, d_plus=0):
    """The alpha = 0 complex from the closed formulas in (tau, theta).

    gamma   = (x + theta^t_1..x + theta^t_x; x^{l_-}; tau^t)  on Q_+
    natural = (x + tau_1..x + tau_x; x^{l_-}; theta)          on W
    in degree -(x^2 + |tau| + |theta|).
    """
    d_minus = m - ell_minus
    kin = KeyLemmaInput(m, n, d_plus, d_minus, (), require_d_order=False)
    gap = kin.gap
    out = _new_complex(kin)
    for x in range(min(gap, d_minus) + 1):
        y = d_minus - x
        for tau in enumerate_box(x, gap - x):
            for theta in enumerate_box(y, x):
                tt = transpose(tau)
                ht = pad(transpose(theta), x)
                gamma = tuple(x + t for t in ht) + (x,) * ell_minus + pad(tt, gap - x)
                natural = tuple(x + t for t in pad(tau, x)) + (x,) * ell_minus + pad(theta, y)
                out.add(-(x * x + size(tau) + size(theta)), natural, trim(gamma))
    return out


def lascoux_last_term(m, n, ell_minus, d_plus=0):
    """The lowest-degree term from the two closed regime formulas.

    Returns (degree, coeff on W, bundle partition on Q_+).
    """
    d_minus = m - ell_minus
    gap = n - d_plus - ell_minus
    degree = -gap * d_minus
    if gap <= d_minus:
        # det W^gap (x) det Q_+^gap (x) Sigma^{((d_- - gap)^gap)} Q_+
        coeff = (gap,) * m
        bundle = tuple(gap + v for v in pad((d_minus - gap,) * gap, n - d_plus))
    else:
        coeff = tuple(d_minus + v for v in pad(((gap - d_minus),) * d_minus, m))
        bundle = (d_minus,) * (n - d_plus)
    return degree, coeff, trim(bundle)


def eagon_northcott_ranks(m, n):
    """Ranks of the Eagon-Northcott resolution of the maximal-minor locus, m <= n.

    Degree 0 is O; degree -(1+t) is Sigma^{(t+1,1^{m-1})}W (x) wedge^{m+t}V^vee,
    of rank C(n, m+t) C(m+t-1, t).
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    out = {0: 1}
    for t in range(n - m + 1):
        out[-(1 + t)] = comb(n, m + t) * comb(m + t - 1, t)
    return out


def buchsbaum_rim_ranks(m, n):
    """Ranks of the Buchsbaum-Rim resolution of coker(V^vee -> W^vee), m <= n.

    F_0 = W^vee, F_1 = V^vee, F_{1+t} = wedge^{m+t}V^vee (x) Gamma^{t-1}W (x) det W.
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    out = {0: m, 1: n}
    for t in range(1, n - m + 1):
        out[1 + t] = comb(n, m + t) * comb(m + t - 2, t - 1)
    return out


def koszul_euler(kin, twist=0):
    """sum_k (-1)^k sum_{|gamma|=k} chi(G_-, ...) dim Sigma^gamma(l_+).

    Computed straight from the Koszul terms, for comparison with the Euler
    rank of the assembled complex.
    """
    total = 0
    for gamma in enumerate_box(kin.ell_plus, kin.d_minus):
        res = _coefficient(kin, gamma, twist)
        if res.vanishing:
            continue
        chi = sign(res.degree) * schur_dim(res.weight, kin.m)
        total += sign(size(gamma)) * chi * schur_dim(gamma, kin.ell_plus)
    return total


def sweep_inputs(max_n):
    """All (m, n, d_+, d_-, alpha) in the acceptance grid 1 <= m <= n <= max_n."""
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            for dp in range(n + 1):
                for dm in range(min(dp, m) + 1):
                    if m - dm > n - dp:
                        continue
                    for alpha in enumerate_box(m - dm, dm):
                        yield KeyLemmaInput(m, n, dp, dm, alpha)


def check_input(kin):
    """All Key Lemma checks on one input; returns None or a failure message."""
    f = key_complex_F(kin)
    bf = brute_force_complex(kin)
    if f != bf:
        return f"F differs from brute force at {kin}"
    data = enumerate_B_alpha(kin)
    expected = comb(kin.gap + kin.d_minus, kin.d_minus)
    if len(data) != expected:
        return f"|B(alpha)|={len(data)} != {expected} at {kin}"
    if len({d.gamma for d in data}) != len(data):
        return f"repeated gamma in B(alpha) at {kin}"
    if sum(1 for d in data if d.gamma == kin.alpha) != 1:
        return f"alpha not in B(alpha) exactly once at {kin}"
    for d in data:
        if d.gamma != kin.alpha and in_box(d.gamma, kin.ell_minus, kin.d_minus):
            return f"{d.gamma} lies in B_(l_-,d_-) at {kin}"
    zero = [((c, b), k) for (c, b), k in f.summands(0)]
    if zero != [((( 0,) * kin.m, kin.alpha), 1)]:
        return f"F^0 is {zero}, not Sigma^alpha Q_+ at {kin}"
    low = -kin.gap * kin.d_minus
    if f.degrees() and (f.degrees()[0] != low or f.degrees()[-1] != 0):
        return f"degree range {f.degrees()} is not [{low}, 0] at {kin}"
    if f.euler_rank() != koszul_euler(kin):
        return f"Euler rank mismatch at {kin}"
    return None


def check_twisted(kin, j):
    """Twisted checks for one (input, j); returns None or a failure message."""
    data = enumerate_B_alpha_twisted(kin, j)
    expected = comb(kin.gap + kin.d_minus, kin.d_minus)
    if len(data) != expected:
        return f"|B^j(alpha)|={len(data)} != {expected} at {kin}, j={j}"
    tw = twisted_complex(kin, j)
    if tw != brute_force_complex(kin, twist=j):
        return f"twisted complex differs from brute force at {kin}, j={j}"
    target = distinguished_twisted_gamma(kin.alpha, j, kin.d_minus)
    hits = [d for d in data if d.gamma == target]
    if len(hits) != 1 or hits[0].p != -kin.d_minus * j:
        return f"distinguished summand {target} not unique in degree {-kin.d_minus * j} at {kin}"
    return None


__all__ = [
    "KeyLemmaInput", "GammaDatum", "GradedComplex", "enumerate_B_alpha", "key_complex_F",
    "key_complex_G", "brute_force_complex", "key_collapse", "enumerate_B_alpha_twisted",
    "twisted_degree", "twisted_complex", "distinguished_twisted_gamma", "lascoux_resolution",
    "lascoux_last_term", "eagon_northcott_ranks", "buchsbaum_rim_ranks", "koszul_euler",
    "sweep_inputs", "check_input", "check_twisted",
]
