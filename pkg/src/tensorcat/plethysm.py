"""Closed-form decompositions of powers of tensor squares.

Six families, all multiplicity-free:

* symmetric/exterior powers of a tensor product x (x) y, indexed by pairs of
  diagrams (the two Cauchy identities);
* symmetric/exterior powers of the symmetric or alternating square of a single
  object, indexed by even partitions, conjugates of even partitions, special
  partitions, or conjugates of special partitions.

A degree-k power of a square lives in diagram degree 2k; the returned
partitions always have 2k boxes.
"""

from __future__ import annotations

from .config import effective_cap
from .diagrams import EMPTY, Partition, from_frobenius, partitions, sort_key, strict_partitions
from .errors import DegreeCapExceeded

PairDecomposition = dict[tuple[Partition, Partition], int]

SYMMETRIC = "symmetric"
EXTERIOR = "exterior"


def _check_power(k: int, cap: int | None) -> None:
    if k < 0:
        raise ValueError(f"power index must be non-negative, got {k}")
    if k > effective_cap(cap):
        raise DegreeCapExceeded(k, effective_cap(cap), what="power index")


def cauchy_sym(k: int, cap: int | None = None) -> PairDecomposition:
    """S^k(x (x) y) = sum of S_lam(x) (x) S_lam(y) over |lam| = k."""
    _check_power(k, cap)
    return {(lam, lam): 1 for lam in partitions(k)}


def cauchy_ext(k: int, cap: int | None = None) -> PairDecomposition:
    """Lambda^k(x (x) y) = sum of S_lam(x) (x) S_{lam'}(y) over |lam| = k."""
    _check_power(k, cap)
    return {(lam, lam.conjugate()): 1 for lam in partitions(k)}


def even_partitions(degree: int) -> tuple[Partition, ...]:
    """Partitions of the given degree with all parts even."""
    if degree % 2:
        return ()
    doubled = [Partition(2 * part for part in p) for p in partitions(degree // 2)]
    return tuple(sorted(doubled, key=sort_key))


def special_partitions(degree: int) -> tuple[Partition, ...]:
    """Partitions with Frobenius coordinates (a_1,...,a_r | a_1+1,...,a_r+1).

    They biject with strict partitions (mu_1 > ... > mu_r) of degree/2 via
    a_i = mu_i - 1, and index exterior powers of an alternating square.
    """
    if degree % 2:
        return ()
    if degree == 0:
        return (EMPTY,)
    found = []
    for mu in strict_partitions(degree // 2):
        arms = tuple(part - 1 for part in mu)
        legs = tuple(mu)
        found.append(from_frobenius(arms, legs))
    return tuple(sorted(found, key=sort_key))


def power_of_sym2(k: int, kind: str, cap: int | None = None) -> dict[Partition, int]:
    """Decompose S^k(S^2 x) or Lambda^k(S^2 x) into Schur functors of x."""
    _check_power(k, cap)
    if kind == SYMMETRIC:
        return {lam: 1 for lam in even_partitions(2 * k)}
    if kind == EXTERIOR:
        conjugates = [lam.conjugate() for lam in special_partitions(2 * k)]
        return {lam: 1 for lam in sorted(conjugates, key=sort_key)}
    raise ValueError(f"unknown power kind {kind!r}")


def power_of_ext2(k: int, kind: str, cap: int | None = None) -> dict[Partition, int]:
    """Decompose S^k(Lambda^2 x) or Lambda^k(Lambda^2 x)."""
    _check_power(k, cap)
    if kind == SYMMETRIC:
        conjugates = [lam.conjugate() for lam in even_partitions(2 * k)]
        return {lam: 1 for lam in sorted(conjugates, key=sort_key)}
    if kind == EXTERIOR:
        return {lam: 1 for lam in special_partitions(2 * k)}
    raise ValueError(f"unknown power kind {kind!r}")
