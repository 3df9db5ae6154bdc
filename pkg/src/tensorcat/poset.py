"""The index poset on quadruples (l, m, n, p) and its defect.

a = (l,m,n,p) lies below b = (l',m',n',p') exactly when b can be driven down
to a by the four degree-one moves

    (l,m,n,p) -> (l+1, m-1, n,   p  )     quotient on the m side
    (l,m,n,p) -> (l,   m,   n-1, p+1)     quotient on the n side
    (l,m,n,p) -> (l,   m-1, n-1, p  )     pairing
    (l,m,n,p) -> (l+1, m,   n,   p+1)     filtration layer twist

equivalently when l >= l', m <= m', n <= n', p >= p' and the linear invariant
l+m-n-p agrees on both sides.  Every saturated chain between comparable
elements has the same length (l-l') + (n'-n) = (p-p') + (m'-m); that common
length is the defect.
"""

from __future__ import annotations

from functools import cache
from typing import NamedTuple

from .errors import ParseError


class QuadIndex(NamedTuple):
    l: int
    m: int
    n: int
    p: int

    def __str__(self) -> str:
        return f"{self.l},{self.m},{self.n},{self.p}"


def quad(l: int, m: int, n: int, p: int) -> QuadIndex:
    q = QuadIndex(int(l), int(m), int(n), int(p))
    if min(q) < 0:
        raise ValueError(f"quadruple entries must be non-negative: {tuple(q)}")
    return q


def parse_quad(text: str) -> QuadIndex:
    tokens = text.strip().split(",")
    if len(tokens) != 4:
        raise ParseError(text, 0, "expected four comma-separated entries")
    entries = []
    pos = 0
    for token in tokens:
        cleaned = token.strip()
        if not cleaned.isdigit():
            raise ParseError(text, text.find(token, pos), f"bad entry {cleaned!r}")
        pos = text.find(token, pos) + len(token)
        entries.append(int(cleaned))
    return quad(*entries)


def invariant(q: QuadIndex) -> int:
    return q.l + q.m - q.n - q.p


def leq(a: QuadIndex, b: QuadIndex) -> bool:
    """Partial order: a below b."""
    return (
        a.l >= b.l
        and a.m <= b.m
        and a.n <= b.n
        and a.p >= b.p
        and invariant(a) == invariant(b)
    )


def defect(a: QuadIndex, b: QuadIndex) -> int | None:
    """Common length of all saturated chains from a up to b; None if incomparable."""
    if not leq(a, b):
        return None
    return (a.l - b.l) + (b.n - a.n)


def defect_mirror(a: QuadIndex, b: QuadIndex) -> int | None:
    """The equivalent closed form on the other pair of coordinates."""
    if not leq(a, b):
        return None
    return (a.p - b.p) + (b.m - a.m)


def _up_moves(a: QuadIndex) -> list[QuadIndex]:
    candidates = [
        (a.l - 1, a.m + 1, a.n, a.p),
        (a.l, a.m, a.n + 1, a.p - 1),
        (a.l, a.m + 1, a.n + 1, a.p),
        (a.l - 1, a.m, a.n, a.p - 1),
    ]
    return [QuadIndex(*c) for c in candidates if min(c) >= 0]


def covers(a: QuadIndex, bound: int) -> list[QuadIndex]:
    """Immediate successors of a whose entries do not exceed bound."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    return sorted(c for c in _up_moves(a) if max(c) <= bound)


def chains(a: QuadIndex, b: QuadIndex) -> list[list[QuadIndex]]:
    """All saturated chains from a up to b.

    Intermediate elements are automatically confined to the box spanned by a
    and b (l, p only decrease upward; m, n only increase), so no external
    bound is needed.
    """
    if not leq(a, b):
        return []

    @cache
    def reachable(x: QuadIndex) -> bool:
        return leq(x, b)

    def extend(x: QuadIndex) -> list[list[QuadIndex]]:
        if x == b:
            return [[x]]
        found = []
        for c in _up_moves(x):
            if reachable(c):
                for tail in extend(c):
                    found.append([x] + tail)
        return found

    return sorted(extend(a))
