"""Integer partitions: orders, diagram statistics, shifted points, enumeration."""

from __future__ import annotations

import json
import math
from functools import lru_cache
from typing import Iterable, Iterator

from .arith import QQ, TauPoly


class Partition:
    """Weakly decreasing tuple of nonnegative integers, trailing zeros trimmed.

    Untrimmed input such as (4, 0) is accepted and canonicalized; all
    order predicates read missing parts as 0.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):  # type: ignore[assignment]
        ps = [int(p) for p in parts]
        while ps and ps[-1] == 0:
            ps.pop()
        for a, b in zip(ps, ps[1:]):
            if a < b:
                raise ValueError("parts are not weakly decreasing: %s" % (ps,))
        if ps and ps[-1] < 0:
            raise ValueError("negative part in %s" % (ps,))
        self.parts = tuple(ps)

    # -- statistics ------------------------------------------------------

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part access, 0 beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def multiplicity(self, value: int) -> int:
        return sum(1 for p in self.parts if p == value)

    def z_factor(self) -> int:
        """prod over part values i of i^m_i * m_i!."""
        out = 1
        for value in set(self.parts):
            m = self.multiplicity(value)
            out *= value ** m * math.factorial(m)
        return out

    # -- orders ------------------------------------------------------------

    def contains(self, other: "Partition") -> bool:
        """Componentwise containment of diagrams."""
        if len(other.parts) > len(self.parts):
            return False
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def weakly_dominates(self, other: "Partition") -> bool:
        """All prefix sums of self at least those of other."""
        acc_a = acc_b = 0
        for k in range(max(len(self.parts), len(other.parts))):
            acc_a += self.part(k + 1)
            acc_b += other.part(k + 1)
            if acc_a < acc_b:
                return False
        return True

    def dominates(self, other: "Partition") -> bool:
        """Weak dominance together with equal size."""
        return self.size == other.size and self.weakly_dominates(other)

    # -- diagram ------------------------------------------------------------

    def conjugate(self) -> "Partition":
        if not self.parts:
            return _EMPTY
        out = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                out[j] += 1
        return Partition(out)

    def cells(self) -> Iterator[tuple[int, int]]:
        """1-based (row, column) cells of the diagram, row-major."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def has_cell(self, i: int, j: int) -> bool:
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def arm(self, i: int, j: int) -> int:
        return self.parts[i - 1] - j

    def leg(self, i: int, j: int) -> int:
        return sum(1 for p in self.parts[i:] if p >= j)

    def corners(self) -> list[int]:
        """1-based rows from which one box can be removed."""
        out = []
        for i, p in enumerate(self.parts, start=1):
            if p > 0 and (i == len(self.parts) or self.parts[i] < p):
                out.append(i)
        return out

    def remove_box(self, row: int) -> "Partition":
        ps = list(self.parts)
        ps[row - 1] -= 1
        return Partition(ps)

    def add_box(self, row: int) -> "Partition":
        """Add one box in the given 1-based row (row may extend the length)."""
        ps = list(self.parts)
        if row == len(ps) + 1:
            ps.append(1)
        else:
            ps[row - 1] += 1
        return Partition(ps)

    # -- ordering/bookkeeping -------------------------------------------------

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Key for the fixed total order: by size, then ascending lex."""
        return (self.size, self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return "Partition(%s)" % (self.parts,)


_EMPTY = Partition()


def contains(lam: Partition, mu: Partition) -> bool:
    return lam.contains(mu)


def dominates(lam: Partition, mu: Partition) -> bool:
    return lam.dominates(mu)


def weakly_dominates(lam: Partition, mu: Partition) -> bool:
    return lam.weakly_dominates(mu)


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def z_factor(lam: Partition) -> int:
    return lam.z_factor()


def coarm_coleg(lam: Partition, cell: tuple[int, int]) -> tuple[int, int]:
    """Coarm and coleg of a 1-based cell: (j-1, i-1)."""
    i, j = cell
    if not lam.has_cell(i, j):
        raise ValueError("cell %s outside diagram of %s" % (cell, lam.parts))
    return (j - 1, i - 1)


def shifted_point(lam: Partition, n: int) -> tuple[TauPoly, ...]:
    """Coordinates lam_i + (n-i)*t for i = 1..n; requires length <= n."""
    if lam.length > n:
        raise ValueError("partition %s longer than %d" % (lam.parts, n))
    return tuple(TauPoly((QQ(lam.part(i)), QQ(n - i))) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def _enumerate_cached(max_size: int, max_length: int) -> tuple[Partition, ...]:
    found: list[Partition] = []

    def grow(prefix: list[int], remaining: int, cap: int):
        found.append(Partition(prefix))
        if len(prefix) >= max_length:
            return
        for nxt in range(1, min(cap, remaining) + 1):
            grow(prefix + [nxt], remaining - nxt, nxt)

    grow([], max_size, max_size)
    found.sort(key=Partition.sort_key)
    return tuple(found)


def enumerate_partitions(max_size: int, max_length: int) -> list[Partition]:
    """All partitions with size <= max_size and length <= max_length,
    in the fixed total order (size, then ascending lexicographic)."""
    if max_size < 0 or max_length < 0:
        raise ValueError("bounds must be nonnegative")
    return list(_enumerate_cached(max_size, max_length))


def partitions_of(size: int, max_length: int) -> list[Partition]:
    """Partitions of exactly the given size, in the fixed total order."""
    return [p for p in enumerate_partitions(size, max_length) if p.size == size]


def cover_pairs(max_size: int, max_length: int) -> list[tuple[Partition, Partition]]:
    """All (lam, mu) with mu = lam minus one box, |lam| <= max_size, l(lam) <= max_length."""
    out = []
    for lam in enumerate_partitions(max_size, max_length):
        for row in lam.corners():
            out.append((lam, lam.remove_box(row)))
    return out


# -- text / JSON interfaces ----------------------------------------------------


def partition_to_text(lam: Partition) -> str:
    return "(%s)" % ",".join(str(p) for p in lam.parts)


def parse_partition(text: str) -> Partition:
    """Parse "3,1", "(3,1)", "[3,1]", or an empty string for ()."""
    text = text.strip()
    if (text.startswith("(") and text.endswith(")")) or \
       (text.startswith("[") and text.endswith("]")):
        text = text[1:-1]
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ValueError("malformed partition %r" % text) from exc
    return Partition(parts)


def partition_to_json(lam: Partition) -> list[int]:
    return list(lam.parts)


def partition_from_json(data) -> Partition:
    if isinstance(data, str):
        data = json.loads(data)
    return Partition(data)
