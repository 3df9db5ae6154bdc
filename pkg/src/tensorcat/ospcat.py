"""Orthogonal and symplectic variants.

Simple objects are indexed by a pair of diagrams, the first living on the
irreducible quotient W, the second on the natural side; the two variants share
one index poset on pairs (l, m).  The pair (l', m') can be driven down to
(l, m) by three degree-one moves,

    (l, m) -> (l+1, m-1)     quotient projection
    (l, m) -> (l,   m-2)     pairing into the algebra object
    (l, m) -> (l+2, m)       filtration layer twist

so a ⪯ b iff l >= l', m <= m' and l+m ≡ l'+m' (mod 2); every saturated chain
between comparable pairs has length ((l-l') + (m'-m)) / 2, which is the defect.

The square used to build the filtration is symmetric for the orthogonal
variant and alternating for the symplectic one; accordingly the filtration
layers are indexed by even partitions or their conjugates, and the resolution
socles by conjugates of special partitions or by special partitions.
"""

from __future__ import annotations

from typing import NamedTuple

from .config import effective_cap
from .diagrams import Partition
from .errors import DegreeCapExceeded
from .plethysm import EXTERIOR, SYMMETRIC, power_of_ext2, power_of_sym2

ORTHOGONAL = "o"
SYMPLECTIC = "sp"
KINDS = (ORTHOGONAL, SYMPLECTIC)


class OspIndex(NamedTuple):
    kind: str
    lam: Partition
    mu: Partition

    @property
    def degree(self) -> int:
        return self.lam.degree + self.mu.degree


def osp_index(kind: str, lam=(), mu=()) -> OspIndex:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return OspIndex(kind, Partition(lam), Partition(mu))


class PairIndex(NamedTuple):
    l: int
    m: int


def osp_leq(a: PairIndex, b: PairIndex) -> bool:
    a, b = PairIndex(*a), PairIndex(*b)
    return a.l >= b.l and a.m <= b.m and (a.l + a.m) % 2 == (b.l + b.m) % 2


def osp_defect(a: PairIndex, b: PairIndex) -> int | None:
    a, b = PairIndex(*a), PairIndex(*b)
    if not osp_leq(a, b):
        return None
    return ((a.l - b.l) + (b.m - a.m)) // 2


def osp_up_moves(a: PairIndex) -> list[PairIndex]:
    a = PairIndex(*a)
    candidates = [(a.l - 1, a.m + 1), (a.l, a.m + 2), (a.l - 2, a.m)]
    return [PairIndex(*c) for c in candidates if min(c) >= 0]


def osp_chains(a: PairIndex, b: PairIndex) -> list[list[PairIndex]]:
    """All saturated chains from a up to b."""
    a, b = PairIndex(*a), PairIndex(*b)
    if not osp_leq(a, b):
        return []

    def extend(x: PairIndex) -> list[list[PairIndex]]:
        if x == b:
            return [[x]]
        found = []
        for c in osp_up_moves(x):
            if osp_leq(c, b):
                for tail in extend(c):
                    found.append([x] + tail)
        return found

    return sorted(extend(a))


def osp_layers_of_i(kind: str, kmax: int, cap: int | None = None) -> list[dict[Partition, int]]:
    """Filtration layers of the injective hull of the unit, per variant.

    Layer k is the k-th symmetric power of the symmetric (orthogonal) or
    alternating (symplectic) square of W.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if kmax < 0:
        raise ValueError("kmax must be non-negative")
    if kmax > effective_cap(cap):
        raise DegreeCapExceeded(kmax, effective_cap(cap), what="layer index")
    power = power_of_sym2 if kind == ORTHOGONAL else power_of_ext2
    return [power(k, SYMMETRIC, cap) for k in range(kmax + 1)]


def osp_ext_to_trivial(kind: str, x: OspIndex, j: int) -> int:
    """dim Ext^j(X, unit) for the chosen variant.

    Exactly one on the W-slot diagrams appearing in the j-th exterior power of
    the square: special partitions of degree 2j for the symplectic variant,
    their conjugates for the orthogonal one.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if j < 0 or x.mu:
        return 0
    if x.lam.degree != 2 * j:
        return 0
    if kind == SYMPLECTIC:
        return 1 if x.lam.is_special() else 0
    return 1 if x.lam.conjugate().is_special() else 0


def osp_conjugate(x: OspIndex) -> OspIndex:
    """Swap the variant and conjugate the W-slot diagram; an involution."""
    other = SYMPLECTIC if x.kind == ORTHOGONAL else ORTHOGONAL
    return OspIndex(other, x.lam.conjugate(), x.mu)


def osp_resolution_socle(kind: str, j: int, cap: int | None = None) -> dict[Partition, int]:
    """W-slot decomposition of the socle of the j-th resolution term."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if j < 0:
        raise ValueError("resolution degree must be non-negative")
    if j > effective_cap(cap):
        raise DegreeCapExceeded(j, effective_cap(cap), what="resolution degree")
    power = power_of_sym2 if kind == ORTHOGONAL else power_of_ext2
    return power(j, EXTERIOR, cap)
