"""Exact computations in products of symmetric-group algebras.

Group elements are tuples of one-line permutations (one per factor), with
composition (s*t)(i) = s(t(i)); coefficients are exact rationals.  This covers
Young symmetrizers and their quasi-idempotency, endomorphism and degree-one
Hom dimensions of the injective generators, and the explicit right-ideal
construction behind the quadratic-relation kernel.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .config import effective_guard
from .diagrams import Partition, standard_tableau_count
from .errors import GuardExceeded
from .linalg import rank_of_rows
from .poset import QuadIndex

Perm = tuple[int, ...]

CONTRACT = "contract"
SHIFT_LEFT = "shiftLeft"
SHIFT_RIGHT = "shiftRight"

YOUNG_SYMMETRIZER_MAX_BOXES = 6


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(s: Perm, t: Perm) -> Perm:
    return tuple(s[t[i]] for i in range(len(s)))


def perm_sign(s: Perm) -> int:
    seen = [False] * len(s)
    sign = 1
    for start in range(len(s)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = s[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def all_perms(n: int):
    return itertools.permutations(range(n))


class GroupAlgebraElement:
    """Element of C[S_{n_1} x ... x S_{n_r}] with rational coefficients."""

    __slots__ = ("sizes", "coeffs")

    def __init__(self, sizes, coeffs=None):
        self.sizes: tuple[int, ...] = tuple(int(n) for n in sizes)
        self.coeffs: dict[tuple[Perm, ...], Fraction] = {}
        if coeffs:
            for g, c in dict(coeffs).items():
                c = Fraction(c)
                if c:
                    self.coeffs[g] = c

    @classmethod
    def unit(cls, sizes) -> "GroupAlgebraElement":
        sizes = tuple(sizes)
        return cls(sizes, {tuple(identity_perm(n) for n in sizes): Fraction(1)})

    @classmethod
    def of(cls, sizes, g, coeff=1) -> "GroupAlgebraElement":
        return cls(sizes, {tuple(g): Fraction(coeff)})

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        assert self.sizes == other.sizes
        merged = dict(self.coeffs)
        for g, c in other.coeffs.items():
            merged[g] = merged.get(g, Fraction(0)) + c
        return GroupAlgebraElement(self.sizes, merged)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def scale(self, factor) -> "GroupAlgebraElement":
        factor = Fraction(factor)
        return GroupAlgebraElement(
            self.sizes, {g: factor * c for g, c in self.coeffs.items()}
        )

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        assert self.sizes == other.sizes
        out: dict[tuple[Perm, ...], Fraction] = {}
        for g, cg in self.coeffs.items():
            for h, ch in other.coeffs.items():
                gh = tuple(compose(a, b) for a, b in zip(g, h))
                out[gh] = out.get(gh, Fraction(0)) + cg * ch
        return GroupAlgebraElement(self.sizes, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupAlgebraElement)
            and self.sizes == other.sizes
            and self.coeffs == other.coeffs
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def support_size(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        return f"GroupAlgebraElement(sizes={self.sizes}, support={len(self.coeffs)})"


def _canonical_filling(lam: Partition) -> list[list[int]]:
    rows = []
    counter = 0
    for part in lam:
        rows.append(list(range(counter, counter + part)))
        counter += part
    return rows


def _stabilizer_perms(groups: list[list[int]], n: int):
    """All permutations of 0..n-1 permuting each listed block within itself."""
    for choice in itertools.product(*[itertools.permutations(block) for block in groups]):
        perm = list(range(n))
        for block, image in zip(groups, choice):
            for src, dst in zip(block, image):
                perm[src] = dst
        yield tuple(perm)


def young_symmetrizer(lam: Partition) -> GroupAlgebraElement:
    """Row symmetrizer times column antisymmetrizer for the canonical filling."""
    lam = Partition(lam)
    n = lam.degree
    if n > YOUNG_SYMMETRIZER_MAX_BOXES:
        raise GuardExceeded(n, YOUNG_SYMMETRIZER_MAX_BOXES, what="symmetrizer boxes")
    filling = _canonical_filling(lam)
    conj = lam.conjugate()
    columns = [
        [filling[i][j] for i in range(conj[j])]
        for j in range(len(conj))
    ]
    row_sum = GroupAlgebraElement(
        (n,), {(p,): Fraction(1) for p in _stabilizer_perms(filling, n)}
    )
    col_sum = GroupAlgebraElement(
        (n,), {(p,): Fraction(perm_sign(p)) for p in _stabilizer_perms(columns, n)}
    )
    return row_sum * col_sum


def young_scalar(lam: Partition) -> int:
    """The scalar h with c^2 = h*c: degree factorial over the tableau count."""
    lam = Partition(lam)
    value, rem = divmod(math.factorial(lam.degree), standard_tableau_count(lam))
    assert rem == 0
    return value


def end_dimension(q: QuadIndex) -> int:
    """Dimension of the endomorphism algebra of the injective generator at q."""
    return (
        math.factorial(q.l) * math.factorial(q.m) * math.factorial(q.n) * math.factorial(q.p)
    )


def hom_dimension_deg1(q: QuadIndex, flavor: str) -> int:
    """Dimension of the degree-one Hom space leaving q in the given flavor."""
    l, m, n, p = q
    if flavor == CONTRACT:
        if m < 1 or n < 1:
            lacking = "m" if m < 1 else "n"
            raise ValueError(f"contract needs m,n >= 1; index {lacking} is zero in {tuple(q)}")
        return math.factorial(l) * math.factorial(m) * math.factorial(n) * math.factorial(p)
    if flavor == SHIFT_LEFT:
        if m < 1:
            raise ValueError(f"shiftLeft needs m >= 1; index m is zero in {tuple(q)}")
        return math.factorial(l + 1) * math.factorial(m) * math.factorial(n) * math.factorial(p)
    if flavor == SHIFT_RIGHT:
        if n < 1:
            raise ValueError(f"shiftRight needs n >= 1; index n is zero in {tuple(q)}")
        return math.factorial(l) * math.factorial(m) * math.factorial(n) * math.factorial(p + 1)
    raise ValueError(f"unknown flavor {flavor!r}")


COMPOSITIONS = (
    "contract,contract",
    "left,left",
    "right,right",
    "contract,left",
    "contract,right",
    "left,right",
)


def composition_domain_dimension(kind: str, q: QuadIndex) -> int:
    """Dimension of the domain of a two-step composition map.

    The domain is the tensor product of two degree-one Hom spaces over the
    endomorphism algebra of the intermediate object; both factors are free
    one-sided modules there, so the dimension is the product of the Hom
    dimensions divided by the intermediate endomorphism dimension (summed over
    the two branches for the mixed compositions).
    """
    l, m, n, p = q

    def fac(*sizes: int) -> int:
        out = 1
        for s in sizes:
            out *= math.factorial(s)
        return out

    if kind == "contract,contract":
        if m < 2 or n < 2:
            raise ValueError(f"needs m,n >= 2, got {tuple(q)}")
        return fac(l, m, n, p)
    if kind == "left,left":
        if m < 2:
            raise ValueError(f"needs m >= 2, got {tuple(q)}")
        return fac(l + 2, m, n, p)
    if kind == "right,right":
        if n < 2:
            raise ValueError(f"needs n >= 2, got {tuple(q)}")
        return fac(l, m, n, p + 2)
    if kind == "contract,left":
        if m < 2 or n < 1:
            raise ValueError(f"needs m >= 2 and n >= 1, got {tuple(q)}")
        return 2 * fac(l + 1, m, n, p)
    if kind == "contract,right":
        if m < 1 or n < 2:
            raise ValueError(f"needs m >= 1 and n >= 2, got {tuple(q)}")
        return 2 * fac(l, m, n, p + 1)
    if kind == "left,right":
        if m < 1 or n < 1:
            raise ValueError(f"needs m,n >= 1, got {tuple(q)}")
        return 2 * fac(l + 1, m, n, p + 1)
    raise ValueError(f"unknown composition {kind!r}")


def quadratic_kernel_dim(q: QuadIndex) -> int:
    """Half the group-algebra dimension: the quadratic-relation kernel size."""
    l, m, n, p = q
    if m < 2 or n < 2:
        raise ValueError(f"quadratic kernel needs m,n >= 2, got {tuple(q)}")
    value, rem = divmod(
        math.factorial(l) * math.factorial(m) * math.factorial(n) * math.factorial(p), 2
    )
    assert rem == 0
    return value


def _group_elements(sizes) -> list[tuple[Perm, ...]]:
    return list(itertools.product(*[list(all_perms(n)) for n in sizes]))


def quadratic_kernel_check(q: QuadIndex, guard: int | None = None) -> bool:
    """Explicitly span the right ideal of 1 - (m,m-1)(n,n-1) and compare ranks.

    Builds every right translate of the generator inside the full group
    algebra, row-reduces exactly, and tests the rank against the closed form.
    """
    l, m, n, p = q
    if m < 2 or n < 2:
        raise ValueError(f"quadratic kernel needs m,n >= 2, got {tuple(q)}")
    total = l + m + n + p
    if total > effective_guard(guard):
        raise GuardExceeded(total, effective_guard(guard))
    sizes = (l, m, n, p)
    elements = _group_elements(sizes)

    swap_m = list(identity_perm(m))
    swap_m[m - 2], swap_m[m - 1] = swap_m[m - 1], swap_m[m - 2]
    swap_n = list(identity_perm(n))
    swap_n[n - 2], swap_n[n - 1] = swap_n[n - 1], swap_n[n - 2]
    twist = (identity_perm(l), tuple(swap_m), tuple(swap_n), identity_perm(p))

    unit = GroupAlgebraElement.unit(sizes)
    generator = unit - GroupAlgebraElement.of(sizes, twist)

    rows = []
    for g in elements:
        translated = generator * GroupAlgebraElement.of(sizes, g)
        rows.append(dict(translated.coeffs))
    rank = rank_of_rows(rows, elements)
    return rank == quadratic_kernel_dim(q)


def corner_algebra_dimension(lam: Partition, pi: Partition, guard: int | None = None) -> int:
    """Rank of the two-sided Young-projector corner of C[S_l x S_p].

    Scalar endomorphism algebras show up as rank one here.
    """
    lam, pi = Partition(lam), Partition(pi)
    total = lam.degree + pi.degree
    if total > effective_guard(guard):
        raise GuardExceeded(total, effective_guard(guard))
    sizes = (lam.degree, pi.degree)
    c_lam = young_symmetrizer(lam)
    c_pi = young_symmetrizer(pi)
    corner = GroupAlgebraElement(
        sizes,
        {
            (g[0], h[0]): cg * ch
            for g, cg in c_lam.coeffs.items()
            for h, ch in c_pi.coeffs.items()
        },
    )
    elements = _group_elements(sizes)
    rows = []
    for g in elements:
        sandwich = corner * GroupAlgebraElement.of(sizes, g) * corner
        if not sandwich.is_zero():
            rows.append(dict(sandwich.coeffs))
    if not rows:
        return 0
    return rank_of_rows(rows, elements)
