"""Littlewood-Richardson coefficients and Schur-basis arithmetic.

The coefficient c^lam_{mu,nu} is computed by enumerating skew tableaux of
shape lam/mu and content nu that are weakly increasing along rows, strictly
increasing down columns, and whose reverse reading word is a lattice word.
Results are memoized in memory and, when a cache file is configured, persisted
to an append-only record file.

Cache record format (one record per line, documented interface):

    <lam>;<mu>;<nu>;<coeff>;<crc>

where a partition is its comma-joined parts (empty string for the empty
diagram) and <crc> is the zlib.crc32 checksum, in fixed-width hex, of the
record text up to and including the coefficient field.  A record failing its
checksum marks the whole file as corrupt; the cache is then discarded and
rebuilt from scratch.
"""

from __future__ import annotations

import threading
import zlib
from pathlib import Path

from .config import effective_cap
from .diagrams import EMPTY, Partition, partitions, sort_key
from .errors import DegreeCapExceeded

_memo: dict[tuple[Partition, Partition, Partition], int] = {}
_memo_lock = threading.Lock()
_disk: "LrDiskCache | None" = None


def _format_partition(p: Partition) -> str:
    return ",".join(str(part) for part in p)


def _parse_cached_partition(text: str) -> Partition:
    return EMPTY if not text else Partition(int(t) for t in text.split(","))


class LrDiskCache:
    """Append-only persistent store of Littlewood-Richardson coefficients."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()

    @staticmethod
    def _checksum(body: str) -> str:
        return f"{zlib.crc32(body.encode('utf-8')):08x}"

    def load(self) -> dict[tuple[Partition, Partition, Partition], int]:
        """Read all records; on any corrupt record discard and truncate."""
        if not self.path.exists():
            return {}
        entries: dict[tuple[Partition, Partition, Partition], int] = {}
        try:
            lines = self.path.read_text(encoding="utf-8").splitlines()
            for line in lines:
                if not line.strip():
                    continue
                body, crc = line.rsplit(";", 1)
                if self._checksum(body) != crc:
                    raise ValueError("checksum mismatch")
                lam_text, mu_text, nu_text, coeff_text = body.split(";")
                key = (
                    _parse_cached_partition(lam_text),
                    _parse_cached_partition(mu_text),
                    _parse_cached_partition(nu_text),
                )
                entries[key] = int(coeff_text)
        except (ValueError, OSError):
            # corrupt cache: rebuild from nothing
            try:
                self.path.write_text("", encoding="utf-8")
            except OSError:
                pass
            return {}
        return entries

    def append(self, lam: Partition, mu: Partition, nu: Partition, coeff: int) -> None:
        body = ";".join(
            (_format_partition(lam), _format_partition(mu), _format_partition(nu), str(coeff))
        )
        line = f"{body};{self._checksum(body)}\n"
        with self._lock:
            try:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with open(self.path, "a", encoding="utf-8") as handle:
                    handle.write(line)
            except OSError:
                pass


def set_disk_cache(path: str | Path | None) -> None:
    """Attach (or detach, with None) the persistent coefficient cache.

    Attaching merges both ways: records on disk feed the in-memory memo, and
    memoized coefficients not yet on disk are appended.
    """
    global _disk
    with _memo_lock:
        if path is None:
            _disk = None
            return
        _disk = LrDiskCache(path)
        on_disk = _disk.load()
        for key, value in _memo.items():
            if key not in on_disk:
                _disk.append(*key, value)
        _memo.update(on_disk)


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()


def _count_lr_tableaux(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Enumerate Littlewood-Richardson fillings of lam/mu with content nu.

    Cells are visited in reverse reading order (rows top to bottom, each row
    right to left) so the lattice condition can be maintained incrementally.
    """
    cells = []
    for r in range(len(lam)):
        start = mu[r] if r < len(mu) else 0
        for c in range(lam[r] - 1, start - 1, -1):
            cells.append((r, c))
    values = len(nu)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (values + 1)

    def in_skew(r: int, c: int) -> bool:
        if r < 0 or r >= len(lam) or c >= lam[r]:
            return False
        return c >= (mu[r] if r < len(mu) else 0)

    def backtrack(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        upper = values
        if in_skew(r, c + 1):
            upper = min(upper, filling[(r, c + 1)])
        lower = 1
        if in_skew(r - 1, c):
            lower = max(lower, filling[(r - 1, c)] + 1)
        for v in range(lower, upper + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += backtrack(idx + 1)
            counts[v] -= 1
        filling.pop((r, c), None)
        return total

    return backtrack(0)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of s_lam in s_mu * s_nu; zero unless degrees add up."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.degree != mu.degree + nu.degree:
        return 0
    if sort_key(mu) > sort_key(nu):
        mu, nu = nu, mu  # symmetric in mu, nu; keep one canonical key
    if not lam.contains(mu):
        return 0
    key = (lam, mu, nu)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    value = _count_lr_tableaux(lam, mu, nu)
    with _memo_lock:
        if key not in _memo:
            _memo[key] = value
            if _disk is not None:
                _disk.append(lam, mu, nu, value)
    return value


class SymFunc:
    """Finitely supported integer combination of Schur basis elements."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[Partition, int] = {}
        if terms:
            for p, coeff in dict(terms).items():
                if coeff:
                    self.terms[Partition(p)] = int(coeff)

    @classmethod
    def schur(cls, p) -> "SymFunc":
        return cls({Partition(p): 1})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({EMPTY: 1})

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def coefficient(self, p) -> int:
        return self.terms.get(Partition(p), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def max_degree(self) -> int:
        return max((p.degree for p in self.terms), default=0)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.items()))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        merged = dict(self.terms)
        for p, coeff in other.terms.items():
            merged[p] = merged.get(p, 0) + coeff
        return SymFunc(merged)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, factor: int) -> "SymFunc":
        return SymFunc({p: factor * coeff for p, coeff in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "SymFunc(0)"
        bits = [f"{coeff}*s{list(p)}" for p, coeff in self.items()]
        return "SymFunc(" + " + ".join(bits) + ")"


def _expansion_candidates(mu: Partition, nu: Partition) -> tuple[Partition, ...]:
    return tuple(p for p in partitions(mu.degree + nu.degree) if p.contains(mu))


def schur_term_product(mu: Partition, nu: Partition, cap: int | None = None) -> SymFunc:
    """Expand s_mu * s_nu in the Schur basis."""
    mu, nu = Partition(mu), Partition(nu)
    degree = mu.degree + nu.degree
    if degree > effective_cap(cap):
        raise DegreeCapExceeded(degree, effective_cap(cap))
    terms = {}
    for lam in _expansion_candidates(mu, nu):
        coeff = lr_coefficient(lam, mu, nu)
        if coeff:
            terms[lam] = coeff
    return SymFunc(terms)


def schur_product(a: SymFunc, b: SymFunc, cap: int | None = None) -> SymFunc:
    """Bilinear extension of the Littlewood-Richardson product."""
    result = SymFunc()
    for mu, ca in a.terms.items():
        for nu, cb in b.terms.items():
            result = result + schur_term_product(mu, nu, cap).scale(ca * cb)
    return result


def elementary_homogeneous(k: int, cap: int | None = None) -> tuple[SymFunc, SymFunc]:
    """The pair (e_k, h_k) = (s_[1^k], s_[k]) of exterior/symmetric characters."""
    if k < 0:
        raise ValueError(f"power index must be non-negative, got {k}")
    if k > effective_cap(cap):
        raise DegreeCapExceeded(k, effective_cap(cap))
    if k == 0:
        return SymFunc.one(), SymFunc.one()
    return SymFunc.schur([1] * k), SymFunc.schur([k])
