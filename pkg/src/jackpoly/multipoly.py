"""Sparse multivariate polynomials over Q(t); internal expansion engine.

Terms map fixed-length exponent tuples to RatFun coefficients.  This is
deliberately minimal: just what basis expansion, substitution x -> x+1,
alternant determinants, and exact evaluation need.
"""

from __future__ import annotations

import math
from itertools import permutations, product

from .arith import QQ, RF_ONE, RF_ZERO, RatFun, TauPoly
from .partitions import Partition


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if not c.is_zero}

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c: RatFun) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MPoly":
        """x_index with 1-based index."""
        e = [0] * nvars
        e[index - 1] = 1
        return cls(nvars, {tuple(e): RF_ONE})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            out[e] = c if cur is None else cur + c
        return MPoly(self.nvars, out)

    def __sub__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            out[e] = -c if cur is None else cur - c
        return MPoly(self.nvars, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "MPoly") -> "MPoly":
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                cur = out.get(key)
                out[key] = c if cur is None else cur + c
        return MPoly(self.nvars, out)

    def scale(self, c: RatFun) -> "MPoly":
        if c.is_zero:
            return MPoly(self.nvars)
        return MPoly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "MPoly":
        result = MPoly.const(self.nvars, RF_ONE)
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, point: tuple[RatFun, ...]) -> RatFun:
        if len(point) != self.nvars:
            raise ValueError("point has wrong arity")
        powers: list[dict[int, RatFun]] = [{0: RF_ONE} for _ in range(self.nvars)]

        def power(i: int, k: int) -> RatFun:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * point[i]
            return cache[k]

        total = RF_ZERO
        for e, c in self.terms.items():
            val = c
            for i, k in enumerate(e):
                if k:
                    val = val * power(i, k)
            total = total + val
        return total

    def shift_by_one(self) -> "MPoly":
        """Substitute x_i -> x_i + 1 for every variable."""
        out: dict = {}
        for e, c in self.terms.items():
            ranges = [range(k + 1) for k in e]
            for sub in product(*ranges):
                mult = 1
                for k, s in zip(e, sub):
                    mult *= math.comb(k, s)
                coeff = c.scale_qq(QQ(mult))
                cur = out.get(sub)
                out[sub] = coeff if cur is None else cur + coeff
        return MPoly(self.nvars, out)

    def coefficient(self, exponents: tuple[int, ...]) -> RatFun:
        return self.terms.get(exponents, RF_ZERO)

    def __eq__(self, other) -> bool:
        return isinstance(other, MPoly) and self.nvars == other.nvars \
            and self.terms == other.terms

    def __repr__(self) -> str:
        return "MPoly(%d vars, %d terms)" % (self.nvars, len(self.terms))


def distinct_permutations(values: tuple[int, ...]) -> set[tuple[int, ...]]:
    return set(permutations(values))


def monomial_orbit(lam: Partition, nvars: int) -> MPoly:
    """The monomial symmetric polynomial of shape lam in nvars variables."""
    if lam.length > nvars:
        raise ValueError("shape %s too long for %d variables" % (lam.parts, nvars))
    padded = lam.parts + (0,) * (nvars - lam.length)
    return MPoly(nvars, {e: RF_ONE for e in distinct_permutations(padded)})


def from_monomial_coeffs(coeffs: dict[Partition, RatFun], nvars: int) -> MPoly:
    out = MPoly.zero(nvars)
    for lam, c in coeffs.items():
        out = out + monomial_orbit(lam, nvars).scale(c)
    return out


class NotSymmetricError(ValueError):
    pass


def to_monomial_coeffs(poly: MPoly) -> dict[Partition, RatFun]:
    """Group a symmetric expansion by monomial orbits; rejects asymmetric input."""
    out: dict[Partition, RatFun] = {}
    seen = 0
    for e, c in poly.terms.items():
        key = tuple(sorted(e, reverse=True))
        if e == key:
            out[Partition(key)] = c
            seen += len(distinct_permutations(key))
    if seen != len(poly.terms):
        raise NotSymmetricError("polynomial is not symmetric")
    for e, c in poly.terms.items():
        rep = out.get(Partition(tuple(sorted(e, reverse=True))))
        if rep is None or rep != c:
            raise NotSymmetricError("polynomial is not symmetric")
    return out


def divide_linear_difference(poly: MPoly, i: int, j: int) -> MPoly:
    """Exact division by (x_i - x_j), 1-based indices; raises if inexact.

    Synthetic division in x_i with coefficients in the remaining
    variables: for f = sum_k A_k x_i^k the quotient satisfies
    q_{k-1} = A_k + x_j * q_k.
    """
    ii, jj = i - 1, j - 1
    layers: dict[int, dict] = {}
    for e, c in poly.terms.items():
        k = e[ii]
        rest = e[:ii] + (0,) + e[ii + 1:]
        layers.setdefault(k, {})[rest] = c
    if not layers:
        return MPoly.zero(poly.nvars)
    top = max(layers)
    quotient: dict = {}
    carry: dict = {}
    for k in range(top, 0, -1):
        level = layers.get(k, {})
        merged = dict(carry)
        for e, c in level.items():
            cur = merged.get(e)
            merged[e] = c if cur is None else cur + c
        merged = {e: c for e, c in merged.items() if not c.is_zero}
        for e, c in merged.items():
            out_e = e[:ii] + (k - 1,) + e[ii + 1:]
            quotient[out_e] = c
        carry = {}
        for e, c in merged.items():
            lifted = list(e)
            lifted[jj] += 1
            carry[tuple(lifted)] = c
    remainder = dict(layers.get(0, {}))
    for e, c in carry.items():
        cur = remainder.get(e)
        remainder[e] = c + cur if cur is not None else c
    if any(not c.is_zero for c in remainder.values()):
        raise ValueError("division by (x_%d - x_%d) is not exact" % (i, j))
    return MPoly(poly.nvars, quotient)


def alternant_determinant(exponents: list[int], nvars: int) -> MPoly:
    """det(x_i ^ exponents[j]) by Leibniz expansion."""
    if len(exponents) != nvars:
        raise ValueError("need one exponent per variable")
    out: dict = {}
    for perm in permutations(range(nvars)):
        sign = 1
        seen = list(perm)
        for a in range(nvars):
            for b in range(a + 1, nvars):
                if seen[a] > seen[b]:
                    sign = -sign
        e = tuple(exponents[perm[i]] for i in range(nvars))
        c = RF_ONE if sign > 0 else -RF_ONE
        cur = out.get(e)
        out[e] = c if cur is None else cur + c
    return MPoly(nvars, out)


def evaluate_poly_point(poly: MPoly, point: tuple[TauPoly, ...]) -> RatFun:
    """Evaluate at polynomial coordinates (no denominators in the point)."""
    return poly.evaluate(tuple(RatFun(p) for p in point))
