"""Semi-standard reverse tableaux and the Jack tableau weight.

A reverse tableau of shape lam and rank N fills the diagram with values
in {1..N}, strictly decreasing down columns and weakly decreasing along
rows.  The weight of a tableau is a product over the chain of shapes
cut out by the entries: for each value v the cells holding entries >= v
form a partition shape, consecutive shapes differ by a horizontal
strip, and each strip contributes a hook-ratio product.  At t = 1 every
weight collapses to 1 and the tableau sum becomes the Schur expansion.
"""

from __future__ import annotations

from functools import lru_cache

from .arith import QQ, RF_ONE, RatFun, TauPoly
from .partitions import Partition


class ReverseTableau:
    __slots__ = ("shape", "rows", "rank")

    def __init__(self, shape: Partition, rows: tuple[tuple[int, ...], ...], rank: int):
        self.shape = shape
        self.rows = rows
        self.rank = rank

    def entry(self, i: int, j: int) -> int:
        """1-based cell access."""
        return self.rows[i - 1][j - 1]

    def row_major(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def is_valid(self) -> bool:
        if tuple(len(r) for r in self.rows) != self.shape.parts:
            return False
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if not 1 <= v <= self.rank:
                    return False
                if j + 1 < len(row) and row[j + 1] > v:
                    return False
                if i + 1 < len(self.rows) and j < len(self.rows[i + 1]) \
                        and self.rows[i + 1][j] >= v:
                    return False
        return True

    def weight_exponents(self) -> tuple[int, ...]:
        """Exponent vector of the monomial x^T, length = rank."""
        out = [0] * self.rank
        for row in self.rows:
            for v in row:
                out[v - 1] += 1
        return tuple(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, ReverseTableau) and self.rows == other.rows \
            and self.shape == other.shape and self.rank == other.rank

    def __hash__(self) -> int:
        return hash((self.shape.parts, self.rows, self.rank))

    def __repr__(self) -> str:
        return "ReverseTableau(%s)" % (tableau_to_text(self),)


def tableau_to_text(t: ReverseTableau) -> str:
    return "[%s]" % ",".join("[%s]" % ",".join(str(v) for v in row) for row in t.rows)


@lru_cache(maxsize=None)
def _enumerate_cached(parts: tuple[int, ...], rank: int) -> tuple[ReverseTableau, ...]:
    shape = Partition(parts)
    cells = [(i, j) for i, p in enumerate(parts, start=1) for j in range(1, p + 1)]
    grid: dict[tuple[int, int], int] = {}
    found: list[ReverseTableau] = []

    def fill(pos: int):
        if pos == len(cells):
            rows = tuple(tuple(grid[(i, j)] for j in range(1, p + 1))
                         for i, p in enumerate(parts, start=1))
            found.append(ReverseTableau(shape, rows, rank))
            return
        i, j = cells[pos]
        hi = rank
        if j > 1:
            hi = min(hi, grid[(i, j - 1)])
        if i > 1:
            hi = min(hi, grid[(i - 1, j)] - 1)
        # strict decrease below forces at least (cells below in column) + 1
        below = sum(1 for p in parts[i:] if p >= j)
        for v in range(1 + below, hi + 1):
            grid[(i, j)] = v
            fill(pos + 1)
        grid.pop((i, j), None)

    fill(0)
    found.sort(key=ReverseTableau.row_major)
    return tuple(found)


def enumerate_rt(shape: Partition, rank: int) -> list[ReverseTableau]:
    """All reverse tableaux of the shape and rank, ascending in the
    lexicographic order of row-major entry sequences."""
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    if shape.length > rank:
        return []
    return list(_enumerate_cached(shape.parts, rank))


def _hook_ratio(kappa: Partition, i: int, j: int) -> RatFun:
    """(a + (l+1)t) / (a + 1 + l*t) for the cell (i, j) of kappa."""
    a = QQ(kappa.arm(i, j))
    l = QQ(kappa.leg(i, j))
    return RatFun(TauPoly((a, l + 1)), TauPoly((a + 1, l)))


def strip_weight(lam: Partition, mu: Partition) -> RatFun:
    """Weight of the horizontal strip lam/mu.

    Product over cells of mu lying in a row the strip meets but in no
    column the strip meets, of the hook ratio in mu over the hook ratio
    in lam.
    """
    if not lam.contains(mu):
        raise ValueError("not a containment: %s over %s" % (lam.parts, mu.parts))
    for i in range(1, lam.length + 1):
        if lam.part(i + 1) > mu.part(i):
            raise ValueError("not a horizontal strip: %s / %s" % (lam.parts, mu.parts))
    rows = [i for i in range(1, lam.length + 1) if lam.part(i) > mu.part(i)]
    cols = set()
    for i in rows:
        cols.update(range(mu.part(i) + 1, lam.part(i) + 1))
    weight = RF_ONE
    for i in rows:
        for j in range(1, mu.part(i) + 1):
            if j in cols:
                continue
            weight = weight * _hook_ratio(mu, i, j) / _hook_ratio(lam, i, j)
    return weight


def psi_weight(t: ReverseTableau) -> RatFun:
    """Jack weight of a reverse tableau: product of strip weights along
    the chain of shapes cut out by entries >= v, v = rank..1."""
    if not t.is_valid():
        raise ValueError("invalid reverse tableau: %s" % tableau_to_text(t))
    chain: list[Partition] = []
    for v in range(t.rank, 0, -1):
        counts = [sum(1 for x in row if x >= v) for row in t.rows]
        chain.append(Partition(counts))
    weight = RF_ONE
    previous = Partition()
    for shape in chain:
        weight = weight * strip_weight(shape, previous)
        previous = shape
    return weight
