"""Borel-Weil-Bott on the Grassmannian Gr_k(V), dim V = n.

A homogeneous bundle is ``Sigma^a U^vee (x) Sigma^b Q^vee`` where U is the
rank k tautological subbundle of V (x) O (so ``U^vee`` has sections
``V^vee``) and Q = V/U has rank n-k.  Cohomology comes back
as a weight for ``Sigma^(...) V^vee``.
"""

from dataclasses import dataclass

from .partitions import check_weight, negate, shift, sign
from .schur import schur_dim


@dataclass(frozen=True)
class HomogeneousBundle:
    n: int
    k: int
    a: tuple  # weight on U^vee, length k
    b: tuple  # weight on Q^vee, length n - k

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")
        a, b = check_weight(self.a), check_weight(self.b)
        if len(a) != self.k or len(b) != self.n - self.k:
            raise ValueError(
                f"length mismatch: a={a} needs length {self.k}, b={b} needs length {self.n - self.k}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def degenerate(self):
        """Gr_0(n) and Gr_n(n) are points."""
        return self.k in (0, self.n)

    @property
    def weight(self):
        return self.a + self.b

    def dual(self):
        return HomogeneousBundle(self.n, self.k, negate(self.a), negate(self.b))

    def rank(self):
        return schur_dim(self.a, self.k) * schur_dim(self.b, self.n - self.k)


@dataclass(frozen=True)
class CohomologyResult:
    vanishing: bool
    degree: int = None
    weight: tuple = None

    def dim(self, n):
        return 0 if self.vanishing else schur_dim(self.weight, n)

    def euler(self, n):
        """Signed dimension (-1)^degree dim H^degree."""
        if self.vanishing:
            return 0
        return sign(self.degree) * schur_dim(self.weight, n)

    def to_json(self):
        if self.vanishing:
            return {"vanishing": True, "degree": None, "weight": None}
        return {"vanishing": False, "degree": self.degree, "weight": list(self.weight)}


VANISHING = CohomologyResult(True)


def rho(n):
    return tuple(range(n, 0, -1))


def bbw(bundle):
    """Cohomology of an irreducible homogeneous bundle on Gr_k(n)."""
    n = bundle.n
    shifted = tuple(x + r for x, r in zip(bundle.weight, rho(n)))
    if len(set(shifted)) < n:
        return VANISHING
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if shifted[i] < shifted[j])
    out = tuple(x - r for x, r in zip(sorted(shifted, reverse=True), rho(n)))
    return CohomologyResult(False, inversions, out)


def bbw_ab(n, k, a, b):
    return bbw(HomogeneousBundle(n, k, tuple(a), tuple(b)))


def cohomology_sections_table(n, k, family):
    """Evaluate bbw on a list of bundles (or (a, b) pairs) on Gr_k(n)."""
    out = []
    for item in family:
        if not isinstance(item, HomogeneousBundle):
            item = HomogeneousBundle(n, k, *item)
        if (item.n, item.k) != (n, k):
            raise ValueError(f"bundle on Gr_{item.k}({item.n}) in a Gr_{k}({n}) table")
        out.append(bbw(item))
    return out


def canonical_bundle(n, k):
    """omega = (det U)^(n-k) (x) (det Q^vee)^k as an (a, b) label."""
    ell = n - k
    return HomogeneousBundle(n, k, (-ell,) * k, (k,) * ell)


def serre_partner(bundle):
    """The bundle E^vee (x) omega whose cohomology is Serre dual to E's."""
    n, k = bundle.n, bundle.k
    ell = n - k
    return HomogeneousBundle(n, k, shift(negate(bundle.a), -ell), shift(negate(bundle.b), k))


def line_bundle_on_projective_space(r, d):
    """O(d) on P^r = Gr_1(r+1), where O(1) = U^vee has sections V^vee."""
    return HomogeneousBundle(r + 1, 1, (d,), (0,) * r)
