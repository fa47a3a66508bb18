"""Exact arithmetic over Q and Q(t), and the positivity-cone decision procedure.

The base field is the field of rational functions in the deformation
parameter t, with exact rational coefficients.  A rational function f
belongs to the positivity cone when it can be written as u/v where both
u and v are polynomials with nonnegative integer coefficients; the set
of nonzero such f is the strict cone.

Membership is decided exactly, without floating point:

  f != 0 lies in the strict cone  <=>  f(t) > 0 for every real t > 0.

Necessity: if f = u/v with u, v nonnegative and nonzero, then u(t) and
v(t) are strictly positive for t > 0, so f cannot vanish or blow up on
(0, oo).  Sufficiency: write f = t^e * p/q with p(0), q(0) != 0; a
polynomial that is strictly positive on [0, oo) acquires nonnegative
coefficients after multiplication by (1+t)^N for some finite N
(Poincare / Polya), and powers of t are moved between numerator and
denominator as needed.  The right-hand side is decided by counting real
roots of the reduced numerator and denominator in (0, oo) with exact
Sturm sequences, plus one sign evaluation at t = 1.

`cone_member` additionally searches for an explicit certificate pair
(u, v) by multiplying through with powers of (1+t); the certificate is
an independent confirmation, never the decision path.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as QQ


class PoleError(ArithmeticError):
    """Evaluation of a rational function at a zero of its denominator."""


_Q0 = QQ(0)
_Q1 = QQ(1)


def _sign(q) -> int:
    return (q > 0) - (q < 0)


def _as_qq(value) -> "QQ":
    if isinstance(value, QQ):
        return value
    return QQ(value)


class TauPoly:
    """Dense univariate polynomial in t with exact rational coefficients.

    coeffs[k] is the coefficient of t^k; trailing zero coefficients are
    trimmed so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):  # type: ignore[assignment]
        cs = [_as_qq(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, value) -> "TauPoly":
        return cls((value,))

    @classmethod
    def tau(cls) -> "TauPoly":
        return cls((0, 1))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else _Q0

    def trailing_zero_count(self) -> int:
        """Multiplicity of the root t = 0."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return 0

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "TauPoly") -> "TauPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return TauPoly(out)

    def __sub__(self, other: "TauPoly") -> "TauPoly":
        out = list(self.coeffs)
        bl = len(other.coeffs)
        if bl > len(out):
            out.extend([_Q0] * (bl - len(out)))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return TauPoly(out)

    def __neg__(self) -> "TauPoly":
        return TauPoly([-c for c in self.coeffs])

    def __mul__(self, other: "TauPoly") -> "TauPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _P_ZERO
        out = [_Q0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return TauPoly(out)

    def scale(self, q) -> "TauPoly":
        q = _as_qq(q)
        if q == 0:
            return _P_ZERO
        return TauPoly([c * q for c in self.coeffs])

    def shift_up(self, k: int) -> "TauPoly":
        """Multiply by t^k."""
        if self.is_zero or k == 0:
            return self
        return TauPoly((_Q0,) * k + self.coeffs)

    def shift_down(self, k: int) -> "TauPoly":
        """Exact division by t^k."""
        if self.is_zero:
            return self
        if self.trailing_zero_count() < k:
            raise ValueError("not divisible by t^%d" % k)
        return TauPoly(self.coeffs[k:])

    def __pow__(self, n: int) -> "TauPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = _P_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def derivative(self) -> "TauPoly":
        return TauPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def eval(self, t0):
        """Horner evaluation at an exact rational point."""
        t0 = _as_qq(t0)
        acc = _Q0
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        return acc

    def divmod(self, other: "TauPoly") -> tuple["TauPoly", "TauPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.leading()
        if len(rem) - 1 < db:
            return _P_ZERO, self
        quot = [_Q0] * (len(rem) - db)
        for top in range(len(rem) - 1, db - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            q = c / lb
            quot[top - db] = q
            for i, bc in enumerate(other.coeffs):
                rem[top - db + i] -= q * bc
        return TauPoly(quot), TauPoly(rem)

    def __mod__(self, other: "TauPoly") -> "TauPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "TauPoly") -> "TauPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "TauPoly":
        if self.is_zero:
            return self
        lc = self.leading()
        if lc == 1:
            return self
        return self.scale(_Q1 / lc)

    # -- integer normal form --------------------------------------------

    def int_cleared(self) -> tuple[list[int], int]:
        """Integer coefficient list plus the positive integer it was scaled by."""
        lcm = 1
        for c in self.coeffs:
            d = int(c.denominator)
            lcm = lcm * d // math.gcd(lcm, d)
        return [int(c * lcm) for c in self.coeffs], lcm

    # -- comparisons / hashing -------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, TauPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "TauPoly(%s)" % (taupoly_to_text(self),)


_P_ZERO = TauPoly()
_P_ONE = TauPoly((1,))
_P_TAU = TauPoly((0, 1))
_P_ONE_PLUS_TAU = TauPoly((1, 1))


def _int_content(cs: Sequence[int]) -> int:
    g = 0
    for c in cs:
        g = math.gcd(g, abs(c))
        if g == 1:
            break
    return g or 1


def _int_primitive(cs: Sequence[int]) -> list[int]:
    g = _int_content(cs)
    return [c // g for c in cs]


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo remainder of integer coefficient lists (b nonzero)."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(rem) - 1 >= db and rem:
        top = len(rem) - 1
        c = rem[-1]
        rem = [x * lb for x in rem]
        off = top - db
        for i, bc in enumerate(b):
            rem[off + i] -= c * bc
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def poly_gcd(a: TauPoly, b: TauPoly) -> TauPoly:
    """Monic gcd over Q, computed with a primitive PRS over the integers."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    fa, _ = a.int_cleared()
    fb, _ = b.int_cleared()
    fa = _int_primitive(fa)
    fb = _int_primitive(fb)
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        r = _int_pseudo_rem(fa, fb)
        fa, fb = fb, _int_primitive(r) if r else []
    return TauPoly(fa).monic()


class RatFun:
    """Element of Q(t) kept in reduced canonical form.

    Invariants: the denominator is nonzero and monic, and numerator and
    denominator are coprime.  The zero element is 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: TauPoly, den: TauPoly = _P_ONE):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num = _P_ZERO
            self.den = _P_ONE
            return
        if not den.is_one:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lc = den.leading()
            if lc != 1:
                inv = _Q1 / lc
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "RatFun":
        return cls(TauPoly((n,)))

    @classmethod
    def from_qq(cls, q) -> "RatFun":
        return cls(TauPoly((q,)))

    @classmethod
    def from_poly(cls, p: TauPoly) -> "RatFun":
        return cls(p)

    @classmethod
    def tau(cls) -> "RatFun":
        return cls(_P_TAU)

    # -- queries --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.is_one and self.den.is_one

    def is_constant(self) -> bool:
        return self.den.is_one and self.num.degree <= 0

    def as_qq(self):
        """The value as an exact rational; requires a constant."""
        if not self.is_constant():
            raise ValueError("rational function is not a constant: %r" % self)
        return self.num.constant_term()

    # -- field operations -------------------------------------------------

    def __add__(self, other: "RatFun") -> "RatFun":
        if self.den.is_one and other.den.is_one:
            out = object.__new__(RatFun)
            out.num = self.num + other.num
            out.den = _P_ONE
            return out
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __sub__(self, other: "RatFun") -> "RatFun":
        if self.den.is_one and other.den.is_one:
            out = object.__new__(RatFun)
            out.num = self.num - other.num
            out.den = _P_ONE
            return out
        if self.den == other.den:
            return RatFun(self.num - other.num, self.den)
        return RatFun(self.num * other.den - other.num * self.den,
                      self.den * other.den)

    def __neg__(self) -> "RatFun":
        out = object.__new__(RatFun)
        out.num = -self.num
        out.den = self.den
        return out

    def __mul__(self, other: "RatFun") -> "RatFun":
        if self.den.is_one and other.den.is_one:
            out = object.__new__(RatFun)
            out.num = self.num * other.num
            out.den = _P_ONE
            return out
        return RatFun(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFun") -> "RatFun":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def scale_qq(self, q) -> "RatFun":
        q = _as_qq(q)
        if q == 0:
            return RF_ZERO
        out = object.__new__(RatFun)
        out.num = self.num.scale(q)
        out.den = self.den
        return out

    def __pow__(self, n: int) -> "RatFun":
        if n < 0:
            return RF_ONE / (self ** (-n))
        out = object.__new__(RatFun)
        out.num = self.num ** n
        out.den = self.den ** n
        return out

    # -- evaluation ------------------------------------------------------

    def eval_at(self, t0):
        """Exact value at a rational point; raises PoleError on a pole."""
        t0 = _as_qq(t0)
        d = self.den.eval(t0)
        if d == 0:
            raise PoleError("pole at t = %s" % t0)
        return self.num.eval(t0) / d

    def limit_at_infinity(self):
        """Limit as t -> +oo: an exact rational, or +-math.inf."""
        if self.is_zero:
            return _Q0
        dn, dd = self.num.degree, self.den.degree
        if dn < dd:
            return _Q0
        if dn == dd:
            return self.num.leading() / self.den.leading()
        s = _sign(self.num.leading()) * _sign(self.den.leading())
        return math.inf if s > 0 else -math.inf

    # -- comparisons / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, RatFun)
                and self.num == other.num and self.den == other.den)

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return "RatFun(%s)" % (ratfun_to_text(self),)


RF_ZERO = RatFun(_P_ZERO)
RF_ONE = RatFun(_P_ONE)
RF_TAU = RatFun(_P_TAU)


def ratfun_arith(a: RatFun, b: RatFun, op: str) -> RatFun:
    """Dispatch form of the four field operations; op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown operation %r" % op)


def eval_at(f: RatFun, t0) -> "QQ":
    return f.eval_at(t0)


def limit_at_infinity(f: RatFun):
    return f.limit_at_infinity()


# ---------------------------------------------------------------------------
# Sturm sequences and root counting on (0, oo)
# ---------------------------------------------------------------------------


def sturm_chain(p: TauPoly) -> list[TauPoly]:
    """Canonical Sturm chain of p, with sign-preserving rescaling.

    Each remainder is divided by the absolute value of its leading
    coefficient; positive rescaling leaves all sign variations intact.
    """
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        r = -(chain[-2] % chain[-1])
        if r.is_zero:
            break
        r = r.scale(_Q1 / abs(r.leading()))
        chain.append(r)
    return chain


def _sign_variations(values) -> int:
    signs = [_sign(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def positive_root_count(p: TauPoly) -> int:
    """Number of distinct real roots of p in the open interval (0, oo)."""
    if p.is_zero:
        raise ValueError("root count of the zero polynomial")
    k = p.trailing_zero_count()
    if k:
        p = p.shift_down(k)
    if p.degree <= 0:
        return 0
    lead = abs(p.leading())
    bound = 2 + max(abs(c) for c in p.coeffs) / lead
    chain = sturm_chain(p)
    at_zero = _sign_variations(c.constant_term() for c in chain)
    at_bound = _sign_variations(c.eval(bound) for c in chain)
    return at_zero - at_bound


# ---------------------------------------------------------------------------
# Cone membership
# ---------------------------------------------------------------------------

CONE_ZERO = "zero"
CONE_MEMBER = "member_positive"
CONE_NON_MEMBER = "non_member"


class ConeResult:
    """Outcome of a cone-membership test, with an optional certificate.

    The certificate, when present, is a pair (u, v) of polynomials with
    nonnegative integer coefficients satisfying f = u/v exactly.
    """

    __slots__ = ("status", "certificate")

    def __init__(self, status: str, certificate: Optional[tuple[TauPoly, TauPoly]] = None):
        self.status = status
        self.certificate = certificate

    @property
    def is_nonnegative(self) -> bool:
        return self.status != CONE_NON_MEMBER

    def __eq__(self, other) -> bool:
        return isinstance(other, ConeResult) and self.status == other.status \
            and self.certificate == other.certificate

    def __repr__(self) -> str:
        if self.certificate is None:
            return "ConeResult(%s)" % self.status
        u, v = self.certificate
        return "ConeResult(%s, %s : %s)" % (
            self.status, taupoly_to_text(u), taupoly_to_text(v))


def _nonnegative_coeffs(p: TauPoly) -> bool:
    return all(c >= 0 for c in p.coeffs)


def _cleared_pair(u: TauPoly, v: TauPoly) -> tuple[TauPoly, TauPoly]:
    cu, lu = u.int_cleared()
    cv, lv = v.int_cleared()
    lcm = lu * lv // math.gcd(lu, lv)
    mu, mv = lcm // lu, lcm // lv
    return TauPoly([c * mu for c in cu]), TauPoly([c * mv for c in cv])


def find_cone_certificate(f: RatFun, max_power: int = 64) -> Optional[tuple[TauPoly, TauPoly]]:
    """Search for f = u/v with nonnegative integer coefficients.

    Multiplies numerator and denominator by growing powers of (1+t); by
    the Polya argument this succeeds for every strict-cone member at
    some finite power, though not necessarily within max_power.
    """
    u, v = f.num, f.den
    for _ in range(max_power + 1):
        if _nonnegative_coeffs(u) and _nonnegative_coeffs(v):
            return _cleared_pair(u, v)
        u = u * _P_ONE_PLUS_TAU
        v = v * _P_ONE_PLUS_TAU
    return None


def cone_member(f: RatFun, max_power: int = 64, find_certificate: bool = True) -> ConeResult:
    """Decide membership of f in the positivity cone.

    Returns status "zero" for f = 0, "member_positive" for nonzero cone
    members, else "non_member".  Nonzero decisions use Sturm root counts
    on (0, oo) for numerator and denominator plus a sign check at t = 1,
    except that an already-nonnegative representation short-circuits as
    its own certificate.
    """
    if f.is_zero:
        return ConeResult(CONE_ZERO)
    if _nonnegative_coeffs(f.num) and _nonnegative_coeffs(f.den):
        return ConeResult(CONE_MEMBER, _cleared_pair(f.num, f.den))
    if positive_root_count(f.num) or positive_root_count(f.den):
        return ConeResult(CONE_NON_MEMBER)
    if f.eval_at(1) <= 0:
        return ConeResult(CONE_NON_MEMBER)
    cert = find_cone_certificate(f, max_power) if find_certificate else None
    return ConeResult(CONE_MEMBER, cert)


# ---------------------------------------------------------------------------
# Canonical text rendering and parsing
# ---------------------------------------------------------------------------


def _int_term_text(coeff: int, power: int, var: str) -> str:
    if power == 0:
        return str(coeff)
    if power == 1:
        body = var
    else:
        body = "%s^%d" % (var, power)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return "%d*%s" % (coeff, body)


def _int_poly_text(coeffs: Sequence[int], var: str) -> str:
    terms = [(c, k) for k, c in enumerate(coeffs) if c != 0]
    if not terms:
        return "0"
    parts = []
    for c, k in reversed(terms):
        text = _int_term_text(c, k, var)
        if parts:
            parts.append("+" + text if not text.startswith("-") else text)
        else:
            parts.append(text)
    return "".join(parts)


def taupoly_to_text(p: TauPoly, var: str = "t") -> str:
    """Text form of a polynomial after clearing to integer coefficients."""
    cs, _ = p.int_cleared()
    g = _int_content(cs)
    return _int_poly_text([c // g for c in cs], var)


def ratfun_num_den_text(f: RatFun, var: str = "t") -> tuple[str, str]:
    """Integer-cleared numerator and denominator strings of f."""
    cn, ln = f.num.int_cleared()
    cd, ld = f.den.int_cleared()
    lcm = ln * ld // math.gcd(ln, ld)
    cn = [c * (lcm // ln) for c in cn]
    cd = [c * (lcm // ld) for c in cd]
    g = math.gcd(_int_content(cn), _int_content(cd))
    cn = [c // g for c in cn]
    cd = [c // g for c in cd]
    return _int_poly_text(cn, var), _int_poly_text(cd, var)


def ratfun_to_text(f: RatFun, var: str = "t") -> str:
    """Canonical rendering: "num", "a/b" for constants, else "(num)/(den)"."""
    num, den = ratfun_num_den_text(f, var)
    if den == "1":
        return num
    if var not in num and var not in den:
        return "%s/%s" % (num, den)
    return "(%s)/(%s)" % (num, den)


def _parse_int_poly(text: str, var: str = "t") -> TauPoly:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    text = text.replace("-", "+-")
    coeffs: dict[int, QQ] = {}
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        neg = chunk.startswith("-")
        if neg:
            chunk = chunk[1:]
        if var in chunk:
            head, _, tail = chunk.partition(var)
            coeff = QQ(head.rstrip("*")) if head.rstrip("*") else _Q1
            power = int(tail[1:]) if tail.startswith("^") else 1
        else:
            coeff = QQ(chunk)
            power = 0
        coeffs[power] = coeffs.get(power, _Q0) + (-coeff if neg else coeff)
    size = max(coeffs) + 1 if coeffs else 0
    out = [_Q0] * size
    for k, c in coeffs.items():
        out[k] = c
    return TauPoly(out)


def parse_ratfun(text: str, var: str = "t") -> RatFun:
    """Parse the canonical renderings produced by ratfun_to_text."""
    text = text.strip()
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            num = _parse_int_poly(text[:i], var)
            den = _parse_int_poly(text[i + 1:], var)
            return RatFun(num, den)
    return RatFun(_parse_int_poly(text, var))
