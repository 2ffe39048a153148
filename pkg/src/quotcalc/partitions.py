"""Young diagrams, integer weights, rectangular boxes and their orders.

Weights are plain tuples of ints.  A weight is non-increasing and its length
is significant: ``(2, 1)`` is a GL_2 weight while ``(2, 1, 0)`` is a GL_3
weight.  Partitions are weights with nonnegative entries; the functions that
only care about the diagram (``transpose``, ``compare``) ignore trailing zeros.
"""

from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement


class BoxOrder(Enum):
    PARTIAL = "partial"            # inclusion of diagrams
    TOTAL = "total"                # graded reverse lexicographic
    PARTIAL_OPPOSITE = "partial-op"
    TOTAL_OPPOSITE = "total-op"


class Comparison(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def is_weight(lam):
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def check_weight(lam):
    lam = tuple(int(x) for x in lam)
    if not is_weight(lam):
        raise ValueError(f"not a non-increasing weight: {lam}")
    return lam


def check_partition(lam):
    lam = check_weight(lam)
    if lam and lam[-1] < 0:
        raise ValueError(f"partition with negative entries: {lam}")
    return lam


def trim(lam):
    """Drop trailing zeros."""
    lam = tuple(lam)
    k = len(lam)
    while k and lam[k - 1] == 0:
        k -= 1
    return lam[:k]


def pad(lam, length):
    """Pad with zeros to ``length`` entries; refuse to drop nonzero rows."""
    lam = tuple(lam)
    if len(lam) > length:
        if any(lam[length:]):
            raise ValueError(f"{lam} has more than {length} nonzero rows")
        return lam[:length]
    return lam + (0,) * (length - len(lam))


def size(lam):
    return sum(lam)


def shift(lam, k):
    """Add ``k`` to every entry."""
    return tuple(x + k for x in lam)


def negate(lam):
    """The dual weight: reverse and negate."""
    return tuple(-x for x in reversed(lam))


def transpose(lam):
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def in_box(lam, ell, d):
    lam = trim(lam)
    return len(lam) <= ell and all(0 <= x <= d for x in lam)


@lru_cache(maxsize=None)
def _box(ell, d):
    if ell == 0 or d == 0:
        return ((),)
    out = []
    # non-increasing sequences of length ell with entries in [0, d]
    for combo in combinations_with_replacement(range(d, -1, -1), ell):
        out.append(trim(combo))
    return tuple(out)


def total_key(lam):
    """Sort key for the graded reverse lexicographic order."""
    lam = trim(lam)
    return (size(lam), tuple(-x for x in lam))


def contains(big, small):
    """True if the diagram ``small`` sits inside ``big``."""
    big, small = trim(big), trim(small)
    if len(small) > len(big):
        return False
    return all(s <= b for s, b in zip(small, big))


def enumerate_box(ell, d, order=BoxOrder.TOTAL):
    """All partitions with at most ``ell`` rows and entries at most ``d``.

    The result is a linear extension of ``order``.  For the partial orders
    the canonical total order (or its reverse) is used, since it refines
    inclusion.
    """
    if ell < 0 or d < 0:
        raise ValueError("box dimensions must be nonnegative")
    items = sorted(_box(ell, d), key=total_key)
    if order in (BoxOrder.TOTAL_OPPOSITE, BoxOrder.PARTIAL_OPPOSITE):
        items.reverse()
    return items


def box_minus(ell, d, ell2, d2):
    """B_{ell,d} minus B_{ell2,d2}, in canonical order."""
    return [lam for lam in enumerate_box(ell, d) if not in_box(lam, ell2, d2)]


def compare(lam, mu, order=BoxOrder.TOTAL):
    lam, mu = trim(check_partition(lam)), trim(check_partition(mu))
    if lam == mu:
        return Comparison.EQUAL
    if order in (BoxOrder.PARTIAL, BoxOrder.PARTIAL_OPPOSITE):
        if contains(mu, lam):
            res = Comparison.LESS
        elif contains(lam, mu):
            res = Comparison.GREATER
        else:
            return Comparison.INCOMPARABLE
    else:
        res = Comparison.LESS if total_key(lam) < total_key(mu) else Comparison.GREATER
    if order in (BoxOrder.PARTIAL_OPPOSITE, BoxOrder.TOTAL_OPPOSITE):
        res = Comparison.GREATER if res is Comparison.LESS else Comparison.LESS
    return res


def preceq(lam, mu):
    """Inclusion order: lam is contained in mu."""
    return contains(mu, lam)


def fmt(lam):
    """Canonical text form ``(a,b,c)``."""
    return "(" + ",".join(str(x) for x in lam) + ")"


def parse(text):
    """Parse comma separated integers; the empty string is the empty weight."""
    text = text.strip().strip("()")
    if not text:
        return ()
    return check_weight(int(t) for t in text.split(","))


def sign(p):
    """(-1)^p as an int, also for negative p."""
    return -1 if p % 2 else 1
