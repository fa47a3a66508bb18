"""Symmetric polynomials over Q(t): bases, inner products, Jack polynomials.

Everything is exact.  A SymPoly stores coefficients against a named
basis; expansion into the monomial basis is the common currency, and
the deformed Hall pairing diagonalizes in power-sum coordinates, which
is where the Gram-Schmidt construction of the Jack basis runs.

The pairing in n variables is only faithful through degree n, so Jack
polynomials of degree d are orthogonalized in max(n, d) variables and
then truncated by setting the extra variables to zero; monic stability
makes the truncation exact.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Sequence

from .arith import (QQ, RF_ONE, RF_ZERO, RatFun, TauPoly, ratfun_to_text,
                    parse_ratfun)
from .multipoly import (MPoly, from_monomial_coeffs, monomial_orbit,
                        to_monomial_coeffs, alternant_determinant,
                        divide_linear_difference)
from .partitions import Partition, enumerate_partitions, partitions_of


BASES = ("monomial", "elementary", "powersum", "schur", "jack")


class UnsupportedRangeError(ValueError):
    """Requested operation outside the faithful / supported range."""


class SymPoly:
    """Symmetric polynomial in nvars variables, tagged with its basis."""

    __slots__ = ("nvars", "basis", "coeffs")

    def __init__(self, nvars: int, basis: str, coeffs: dict):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        self.nvars = nvars
        self.basis = basis
        self.coeffs = {k: v for k, v in coeffs.items() if not v.is_zero}

    @classmethod
    def constant(cls, nvars: int, value: RatFun, basis: str = "monomial") -> "SymPoly":
        return cls(nvars, basis, {Partition(): value})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((k.size for k in self.coeffs), default=0)

    def coefficient(self, key: Partition) -> RatFun:
        return self.coeffs.get(key, RF_ZERO)

    def homogeneous_slices(self) -> dict[int, dict[Partition, RatFun]]:
        out: dict[int, dict[Partition, RatFun]] = {}
        for k, v in self.coeffs.items():
            out.setdefault(k.size, {})[k] = v
        return out

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check_mate(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, RF_ZERO) + v
        return SymPoly(self.nvars, self.basis, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        self._check_mate(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, RF_ZERO) - v
        return SymPoly(self.nvars, self.basis, out)

    def scale(self, c: RatFun) -> "SymPoly":
        return SymPoly(self.nvars, self.basis,
                       {k: v * c for k, v in self.coeffs.items()})

    def _check_mate(self, other: "SymPoly"):
        if self.nvars != other.nvars or self.basis != other.basis:
            raise ValueError("mixed bases or variable counts")

    def __eq__(self, other) -> bool:
        return (isinstance(other, SymPoly) and self.nvars == other.nvars
                and self.basis == other.basis and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return "SymPoly(n=%d, %s, %s)" % (self.nvars, self.basis, sympoly_to_text(self))


# ---------------------------------------------------------------------------
# Basis elements and expansion to the monomial basis
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _elementary_one(r: int, nvars: int) -> MPoly:
    if r > nvars:
        return MPoly.zero(nvars)
    if r == 0:
        return MPoly.const(nvars, RF_ONE)
    return monomial_orbit(Partition((1,) * r), nvars)


@lru_cache(maxsize=None)
def _powersum_one(r: int, nvars: int) -> MPoly:
    if r == 0:
        return MPoly.const(nvars, RF_ONE)
    return monomial_orbit(Partition((r,)), nvars)


@lru_cache(maxsize=None)
def _product_expansion(tag: str, parts: tuple[int, ...], nvars: int) -> MPoly:
    unit = _elementary_one if tag == "elementary" else _powersum_one
    out = MPoly.const(nvars, RF_ONE)
    for r in parts:
        out = out * unit(r, nvars)
    return out


def basis_element(tag: str, lam: Partition, nvars: int) -> SymPoly:
    """m, e, p, s or Jack basis element, expanded in the monomial basis."""
    if tag == "monomial":
        if lam.length > nvars:
            raise ValueError("m_%s needs at least %d variables" % (lam.parts, lam.length))
        return SymPoly(nvars, "monomial", {lam: RF_ONE})
    if tag in ("elementary", "powersum"):
        mp = _product_expansion(tag, lam.parts, nvars)
        return SymPoly(nvars, "monomial", to_monomial_coeffs(mp))
    if tag == "schur":
        return schur(lam, nvars)
    if tag == "jack":
        return jack(lam, nvars)
    raise ValueError("unknown basis %r" % tag)


def to_monomial(f: SymPoly) -> SymPoly:
    if f.basis == "monomial":
        return f
    total: dict[Partition, RatFun] = {}
    for key, coeff in f.coeffs.items():
        expanded = basis_element(f.basis, key, f.nvars)
        for k, v in expanded.coeffs.items():
            total[k] = total.get(k, RF_ZERO) + v * coeff
    return SymPoly(f.nvars, "monomial", total)


def to_mpoly(f: SymPoly) -> MPoly:
    return from_monomial_coeffs(to_monomial(f).coeffs, f.nvars)


# ---------------------------------------------------------------------------
# Schur polynomials via the bialternant
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _schur_cached(parts: tuple[int, ...], nvars: int) -> SymPoly:
    lam = Partition(parts)
    if nvars == 0:
        return SymPoly.constant(0, RF_ONE)
    exps = [lam.part(j) + nvars - j for j in range(1, nvars + 1)]
    numerator = alternant_determinant(exps, nvars)
    for i in range(1, nvars + 1):
        for j in range(i + 1, nvars + 1):
            numerator = divide_linear_difference(numerator, i, j)
    return SymPoly(nvars, "monomial", to_monomial_coeffs(numerator))


def schur(lam: Partition, nvars: int) -> SymPoly:
    """s_lam as a quotient of alternants, in the monomial basis."""
    if lam.length > nvars:
        raise ValueError("s_%s needs at least %d variables" % (lam.parts, lam.length))
    return _schur_cached(lam.parts, nvars)


# ---------------------------------------------------------------------------
# Power-sum coordinates and the two Hall pairings
# ---------------------------------------------------------------------------


def _solve_qq_inverse(matrix: list[list]) -> list[list]:
    """Dense inverse over exact rationals (Gauss-Jordan)."""
    size = len(matrix)
    aug = [[QQ(matrix[i][j]) for j in range(size)] +
           [QQ(1) if k == i else QQ(0) for k in range(size)]
           for i in range(size)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular transition matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = QQ(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@lru_cache(maxsize=None)
def _p_to_m_matrix(degree: int, nvars: int):
    """Columns: p_kappa over kappa |- degree, expanded in m; plus index lists."""
    if degree > nvars:
        raise UnsupportedRangeError(
            "power-sum coordinates are only faithful through degree %d" % nvars)
    kappas = partitions_of(degree, degree)
    mus = partitions_of(degree, min(degree, nvars))
    columns = []
    for kappa in kappas:
        mp = _product_expansion("powersum", kappa.parts, nvars)
        col = to_monomial_coeffs(mp)
        columns.append([col.get(mu, RF_ZERO).as_qq() for mu in mus])
    matrix = [[columns[j][i] for j in range(len(kappas))] for i in range(len(mus))]
    return kappas, mus, matrix, _solve_qq_inverse(matrix)


def _to_p_coords(slice_coeffs: dict[Partition, RatFun], degree: int, nvars: int):
    kappas, mus, _, inverse = _p_to_m_matrix(degree, nvars)
    vec = [slice_coeffs.get(mu, RF_ZERO) for mu in mus]
    out = []
    for i in range(len(kappas)):
        acc = RF_ZERO
        for j, v in enumerate(vec):
            q = inverse[i][j]
            if q != 0 and not v.is_zero:
                acc = acc + v.scale_qq(q)
        out.append(acc)
    return kappas, out


def _from_p_coords(kappas: Sequence[Partition], coords: Sequence[RatFun],
                   degree: int, nvars: int) -> dict[Partition, RatFun]:
    k_all, mus, matrix, _ = _p_to_m_matrix(degree, nvars)
    index = {k: i for i, k in enumerate(k_all)}
    out: dict[Partition, RatFun] = {}
    for i, mu in enumerate(mus):
        acc = RF_ZERO
        for kappa, c in zip(kappas, coords):
            q = matrix[i][index[kappa]]
            if q != 0 and not c.is_zero:
                acc = acc + c.scale_qq(q)
        if not acc.is_zero:
            out[mu] = acc
    return out


def convert_to_powersum(f: SymPoly) -> SymPoly:
    mono = to_monomial(f)
    if mono.degree() > f.nvars:
        raise UnsupportedRangeError(
            "power-sum expansion needs degree <= %d here" % f.nvars)
    out: dict[Partition, RatFun] = {}
    for degree, slice_coeffs in mono.homogeneous_slices().items():
        kappas, coords = _to_p_coords(slice_coeffs, degree, f.nvars)
        for kappa, c in zip(kappas, coords):
            if not c.is_zero:
                out[kappa] = c
    return SymPoly(f.nvars, "powersum", out)


@lru_cache(maxsize=None)
def _e_to_m_data(degree: int, nvars: int):
    kappas = [k for k in partitions_of(degree, degree) if k.part(1) <= nvars]
    mus = partitions_of(degree, min(degree, nvars))
    matrix = []
    cols = []
    for kappa in kappas:
        mp = _product_expansion("elementary", kappa.parts, nvars)
        col = to_monomial_coeffs(mp)
        cols.append([col.get(mu, RF_ZERO).as_qq() for mu in mus])
    matrix = [[cols[j][i] for j in range(len(kappas))] for i in range(len(mus))]
    return kappas, mus, _solve_qq_inverse(matrix)


def convert_to_elementary(f: SymPoly) -> SymPoly:
    mono = to_monomial(f)
    out: dict[Partition, RatFun] = {}
    for degree, slice_coeffs in mono.homogeneous_slices().items():
        kappas, mus, inverse = _e_to_m_data(degree, f.nvars)
        vec = [slice_coeffs.get(mu, RF_ZERO) for mu in mus]
        for i, kappa in enumerate(kappas):
            acc = RF_ZERO
            for j, v in enumerate(vec):
                q = inverse[i][j]
                if q != 0 and not v.is_zero:
                    acc = acc + v.scale_qq(q)
            if not acc.is_zero:
                out[kappa] = acc
    return SymPoly(f.nvars, "elementary", out)


def _back_substitute(mono: SymPoly, tag: str) -> SymPoly:
    """Expand into a basis that is unitriangular over monomials."""
    remaining = dict(mono.coeffs)
    out: dict[Partition, RatFun] = {}
    while remaining:
        key = max(remaining, key=Partition.sort_key)
        coeff = remaining.pop(key)
        if coeff.is_zero:
            continue
        out[key] = coeff
        expansion = basis_element(tag, key, mono.nvars)
        for k, v in expansion.coeffs.items():
            if k == key:
                continue
            remaining[k] = remaining.get(k, RF_ZERO) - v * coeff
    return SymPoly(mono.nvars, tag, out)


def convert(f: SymPoly, target: str) -> SymPoly:
    """Exact change of basis; round trips are identities."""
    if target not in BASES:
        raise ValueError("unknown basis %r" % target)
    if target == f.basis:
        return f
    if target == "monomial":
        return to_monomial(f)
    if target == "powersum":
        return convert_to_powersum(f)
    if target == "elementary":
        return convert_to_elementary(f)
    return _back_substitute(to_monomial(f), target)


def _pairing_weight_tau(kappa: Partition) -> RatFun:
    z = QQ(kappa.z_factor())
    return RatFun(TauPoly((z,)), TauPoly((QQ(0),) * kappa.length + (QQ(1),)))


def hall_inner_tau(f: SymPoly, g: SymPoly) -> RatFun:
    """Deformed Hall pairing; <p_k, p_k> = z_k / t^{l(k)}."""
    if f.nvars != g.nvars:
        raise ValueError("mixed variable counts")
    pf = convert_to_powersum(f)
    pg = convert_to_powersum(g)
    total = RF_ZERO
    for kappa, a in pf.coeffs.items():
        b = pg.coeffs.get(kappa)
        if b is not None:
            total = total + a * b * _pairing_weight_tau(kappa)
    return total


def hall_inner(f: SymPoly, g: SymPoly):
    """Classical Hall pairing on rational-coefficient inputs."""
    if f.nvars != g.nvars:
        raise ValueError("mixed variable counts")
    pf = convert_to_powersum(f)
    pg = convert_to_powersum(g)
    total = QQ(0)
    for kappa, a in pf.coeffs.items():
        b = pg.coeffs.get(kappa)
        if b is not None:
            total += a.as_qq() * b.as_qq() * kappa.z_factor()
    return total


# ---------------------------------------------------------------------------
# Jack polynomials by Gram-Schmidt
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _jack_family(degree: int, nvars: int) -> dict[Partition, dict[Partition, RatFun]]:
    """All monic Jack polynomials of one degree in nvars >= degree variables.

    Orthogonalizes the monomial basis along the fixed total order
    (ascending refines dominance, so every dominated partition is
    processed first).  Projections onto incomparable partitions vanish
    automatically by orthogonality of the true Jack basis.
    """
    if degree == 0:
        return {Partition(): {Partition(): RF_ONE}}
    shapes = partitions_of(degree, min(degree, nvars))
    done_p: list[tuple[Partition, list[RatFun], RatFun]] = []
    family: dict[Partition, dict[Partition, RatFun]] = {}
    kappas = partitions_of(degree, degree)
    weights = [_pairing_weight_tau(k) for k in kappas]
    m_vectors: dict[Partition, dict[Partition, RatFun]] = {}

    def dot(a: list[RatFun], b: list[RatFun]) -> RatFun:
        total = RF_ZERO
        for x, y, w in zip(a, b, weights):
            if not x.is_zero and not y.is_zero:
                total = total + x * y * w
        return total

    for lam in shapes:
        _, coords = _to_p_coords({lam: RF_ONE}, degree, nvars)
        m_coeffs: dict[Partition, RatFun] = {lam: RF_ONE}
        for mu, mu_coords, mu_norm in done_p:
            c = dot(coords, mu_coords) / mu_norm
            if c.is_zero:
                continue
            coords = [a - c * b for a, b in zip(coords, mu_coords)]
            for k, v in m_vectors[mu].items():
                m_coeffs[k] = m_coeffs.get(k, RF_ZERO) - c * v
        m_coeffs = {k: v for k, v in m_coeffs.items() if not v.is_zero}
        done_p.append((lam, coords, dot(coords, coords)))
        m_vectors[lam] = m_coeffs
        family[lam] = m_coeffs
    return family


@lru_cache(maxsize=None)
def _jack_cached(parts: tuple[int, ...], nvars: int) -> SymPoly:
    lam = Partition(parts)
    full = max(nvars, lam.size)
    family = _jack_family(lam.size, full)
    coeffs = {k: v for k, v in family[lam].items() if k.length <= nvars}
    return SymPoly(nvars, "monomial", coeffs)


def jack(lam: Partition, nvars: int) -> SymPoly:
    """Monic Jack polynomial in the monomial basis."""
    if lam.length > nvars:
        raise ValueError("P_%s needs at least %d variables" % (lam.parts, lam.length))
    return _jack_cached(lam.parts, nvars)


def principal_spec_jack(lam: Partition, nvars: int) -> RatFun:
    """Value of the monic Jack polynomial at (1,...,1), as the closed
    product over diagram cells ((n-i+1)t + j-1) / ((l'+1)t + a')
    with a' and l' the arm and leg inside lam."""
    if lam.length > nvars:
        raise ValueError("partition longer than the variable count")
    num = TauPoly((1,))
    den = TauPoly((1,))
    conj = lam.conjugate()
    for (i, j) in lam.cells():
        num = num * TauPoly((QQ(j - 1), QQ(nvars - i + 1)))
        den = den * TauPoly((QQ(lam.part(i) - j), QQ(conj.part(j) - i + 1)))
    return RatFun(num, den)


# ---------------------------------------------------------------------------
# Substitution, evaluation, specialization
# ---------------------------------------------------------------------------


def shift_vars(f: SymPoly) -> SymPoly:
    """Substitute x_i -> x_i + 1 in every variable; monomial-basis result."""
    shifted = to_mpoly(f).shift_by_one()
    return SymPoly(f.nvars, "monomial", to_monomial_coeffs(shifted))


def _coerce_point(point: Iterable) -> tuple[RatFun, ...]:
    out = []
    for v in point:
        if isinstance(v, RatFun):
            out.append(v)
        elif isinstance(v, TauPoly):
            out.append(RatFun(v))
        else:
            out.append(RatFun(TauPoly((QQ(v),))))
    return tuple(out)


def evaluate(f: SymPoly, point: Iterable) -> RatFun:
    """Exact evaluation at a point of rational functions."""
    point = _coerce_point(point)
    if len(point) != f.nvars:
        raise ValueError("point length must be %d" % f.nvars)
    return to_mpoly(f).evaluate(point)


def monomial_ones_value(lam: Partition, nvars: int):
    """m_lam(1,...,1): the number of distinct rearrangements."""
    if lam.length > nvars:
        return QQ(0)
    count = math.factorial(nvars) // math.factorial(nvars - lam.length)
    for value in set(lam.parts):
        count //= math.factorial(lam.multiplicity(value))
    return QQ(count)


def ones_value(f: SymPoly) -> RatFun:
    """f(1,...,1) for a monomial-basis polynomial, by orbit counting."""
    mono = to_monomial(f)
    total = RF_ZERO
    for k, v in mono.coeffs.items():
        total = total + v.scale_qq(monomial_ones_value(k, f.nvars))
    return total


# ---------------------------------------------------------------------------
# Text / JSON renderings
# ---------------------------------------------------------------------------

_BASIS_SYMBOL = {"monomial": "m", "elementary": "e", "powersum": "p",
                 "schur": "s", "jack": "P"}


def sympoly_to_text(f: SymPoly) -> str:
    if not f.coeffs:
        return "0"
    sym = _BASIS_SYMBOL[f.basis]
    chunks = []
    for key in sorted(f.coeffs, key=Partition.sort_key, reverse=True):
        coeff = ratfun_to_text(f.coeffs[key])
        label = "%s[%s]" % (sym, ",".join(str(p) for p in key.parts))
        if coeff == "1":
            chunks.append(label)
        else:
            wrapped = coeff if coeff.lstrip("-").isdigit() else "(%s)" % coeff
            chunks.append("%s*%s" % (wrapped, label))
    return " + ".join(chunks)


def sympoly_to_json(f: SymPoly) -> dict:
    terms = [{"partition": list(k.parts), "coeff": ratfun_to_text(f.coeffs[k])}
             for k in sorted(f.coeffs, key=Partition.sort_key)]
    return {"n": f.nvars, "basis": f.basis, "terms": terms}


def sympoly_from_json(data: dict) -> SymPoly:
    coeffs = {Partition(term["partition"]): parse_ratfun(term["coeff"])
              for term in data["terms"]}
    return SymPoly(int(data["n"]), data["basis"], coeffs)
