"""Classes in Z[L], L the class of the affine line.

Everything here is an integer polynomial in L: affine and projective
spaces, Grassmannians (Gaussian binomials), and the stratified identity
expressing the class of a Quot scheme through Grassmannian bundles.
"""

import random
from functools import lru_cache
from math import comb


class LPolynomial:
    """Integer polynomial in L, stored as a coefficient tuple (index = power)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("LPolynomial is immutable")

    @classmethod
    def monomial(cls, k, c=1):
        if k < 0:
            raise ValueError("negative power of L")
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return LPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                           for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return LPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return LPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LPolynomial((other,))
        if not isinstance(other, LPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, value):
        """Evaluate at L = value."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def is_palindromic(self):
        return self.coeffs == self.coeffs[::-1]

    def __repr__(self):
        return f"LPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mon = "" if k == 0 else ("L" if k == 1 else f"L^{k}")
            if not mon:
                terms.append(str(c))
            elif c == 1:
                terms.append(mon)
            elif c == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{c}{mon}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self):
        return {"coeffs": list(self.coeffs)}


def _lift(x):
    if isinstance(x, LPolynomial):
        return x
    if isinstance(x, int):
        return LPolynomial((x,))
    raise TypeError(f"cannot use {type(x).__name__} as a class in Z[L]")


ONE = LPolynomial((1,))
L = LPolynomial((0, 1))


def class_affine(n):
    if n < 0:
        raise ValueError("n must be nonnegative")
    return LPolynomial.monomial(n)


def class_proj(n):
    if n < 0:
        raise ValueError("n must be nonnegative")
    return LPolynomial((1,) * (n + 1))


@lru_cache(maxsize=None)
def class_grass(d, n):
    """[Gr_d(n)] via [n,d] = [n-1,d-1] + L^d [n-1,d]; zero outside 0 <= d <= n."""
    if d < 0 or d > n:
        return LPolynomial()
    if d == 0 or d == n:
        return ONE
    return class_grass(d - 1, n - 1) + LPolynomial.monomial(d) * class_grass(d, n - 1)


def betti_numbers(d, n):
    return list(class_grass(d, n).coeffs)


def binomial_rhs(delta, d, k):
    return sum((LPolynomial.monomial((delta - i) * (d - i)) * class_grass(i, delta)
                * class_grass(d - i, k) for i in range(min(d, delta) + 1)), LPolynomial())


def binomial_identity_check(delta, d, k):
    """[Gr_d(delta+k)] == sum_i L^{(delta-i)(d-i)} [Gr_i(delta)] [Gr_{d-i}(k)]."""
    if min(delta, d, k) < 0:
        raise ValueError("parameters must be nonnegative")
    return class_grass(d, delta + k) == binomial_rhs(delta, d, k)


def _check_strata(strata):
    out = []
    seen = set()
    for item in strata:
        try:
            k, cls = item
        except (TypeError, ValueError):
            raise ValueError(f"malformed stratum {item!r}") from None
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"stratum index must be a nonnegative int, got {k!r}")
        if k in seen:
            raise ValueError(f"stratum {k} listed twice")
        seen.add(k)
        out.append((k, _lift(cls)))
    return out


def quot_identity_eval(delta, d, strata):
    """Evaluate both sides of the stratified Quot formula.

    ``strata`` lists (k, class of the locus where the cokernel has rank
    exactly delta + k).  Over that locus the Quot scheme of rank d quotients
    is a Gr_d(delta + k)-bundle, and the Quot scheme of rank d - i quotients
    of the dual cokernel is a Gr_{d-i}(k)-bundle.
    """
    if delta < 0 or d < 0:
        raise ValueError("delta and d must be nonnegative")
    strata = _check_strata(strata)
    lhs = sum((class_grass(d, delta + k) * c for k, c in strata), LPolynomial())
    rhs = LPolynomial()
    for i in range(min(d, delta) + 1):  # [Gr_i(delta)] = 0 beyond
        quot = sum((class_grass(d - i, k) * c for k, c in strata), LPolynomial())
        rhs = rhs + LPolynomial.monomial((d - i) * (delta - i)) * class_grass(i, delta) * quot
    return lhs, rhs, lhs == rhs


def random_strata(rng, max_strata=4, max_degree=5, max_coeff=9):
    """Random nonnegative stratum classes for identity checks."""
    count = rng.randint(1, max_strata)
    ks = sorted(rng.sample(range(max_strata + 2), count))
    return [(k, LPolynomial(rng.randint(0, max_coeff) for _ in range(rng.randint(1, max_degree + 1))))
            for k in ks]


def run_motivic_suite(max_n=6, samples=100, seed=0):
    """Acceptance grid; returns (cases, first failure or None)."""
    cases = 0
    for delta in range(max_n + 1):
        for d in range(max_n + 1):
            for k in range(max_n + 1):
                cases += 1
                if not binomial_identity_check(delta, d, k):
                    return cases, f"binomial identity fails at delta={delta}, d={d}, k={k}"
    rng = random.Random(seed)
    for _ in range(samples):
        strata = random_strata(rng)
        for delta in range(min(max_n, 4) + 1):
            for d in range(min(max_n, 4) + 1):
                cases += 1
                if not quot_identity_eval(delta, d, strata)[2]:
                    return cases, f"Quot identity fails at delta={delta}, d={d}, strata={strata}"
    for n in range(max(max_n, 10) + 1):
        for d in range(n + 1):
            cases += 1
            g = class_grass(d, n)
            if not g.is_palindromic() or g(1) != comb(n, d) or g != class_grass(n - d, n):
                return cases, f"Grassmannian class check fails at d={d}, n={n}"
    return cases, None
