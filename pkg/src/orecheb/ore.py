"""Ore polynomials: differential operators over Q(x), recurrence operators over Q(n).

Differential operators ``sum p_i(x) Dx^i`` follow ``Dx p = p Dx + p'``.
Recurrence operators are Laurent polynomials ``sum r_j(n) S^j`` with
``S^j r(n) = r(n+j) S^j``.  Recurrence operators come with right and left
Euclidean division and the gcrd/lclm/gcld/lcrm toolbox built on them.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Iterable, Mapping, Sequence

from .field import ONE, ZERO, RatFunc, RatPoly, ZeroDivisorError, _igcd, _primitive

Scalar = RatFunc | RatPoly | int | Fraction


class OreError(ArithmeticError):
    pass


def _rf(v) -> RatFunc:
    return RatFunc.coerce(v)


def ore_mul(
    a: Sequence[RatFunc],
    b: Sequence[RatFunc],
    sigma: Callable[[RatFunc], RatFunc],
    delta: Callable[[RatFunc], RatFunc] | None,
) -> list[RatFunc]:
    """Product of two Ore polynomials given by coefficient lists.

    Generic in the commutation ``d p = sigma(p) d + delta(p)``; ``d^i * b``
    is built one power at a time.
    """
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    cur = list(b)
    for i, ai in enumerate(a):
        if i:
            nxt = [ZERO] * (len(cur) + 1)
            for j, c in enumerate(cur):
                nxt[j + 1] = nxt[j + 1] + sigma(c)
                if delta is not None:
                    nxt[j] = nxt[j] + delta(c)
            cur = nxt
        if ai:
            for j, c in enumerate(cur):
                if c:
                    out[j] = out[j] + ai * c
    return out


# ---------------------------------------------------------------------------
# differential operators


class DiffOp:
    """Linear differential operator ``sum_i coeffs[i](x) * Dx^i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [_rf(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[RatFunc, ...] = tuple(cs)

    @classmethod
    def x(cls) -> DiffOp:
        return cls([RatPoly.x()])

    @classmethod
    def dx(cls) -> DiffOp:
        return cls([0, 1])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, i: int) -> RatFunc:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __add__(self, other) -> DiffOp:
        if not isinstance(other, DiffOp):
            other = DiffOp([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOp(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> DiffOp:
        return DiffOp(-c for c in self.coeffs)

    def __sub__(self, other) -> DiffOp:
        if not isinstance(other, DiffOp):
            other = DiffOp([other])
        return self + (-other)

    def __rsub__(self, other) -> DiffOp:
        return (-self) + other

    def __mul__(self, other) -> DiffOp:
        if not isinstance(other, DiffOp):
            other = DiffOp([other])
        return diff_mul(self, other)

    def __rmul__(self, other) -> DiffOp:
        return diff_mul(DiffOp([other]), self)

    def __pow__(self, e: int) -> DiffOp:
        out = DiffOp([1])
        for _ in range(e):
            out = out * self
        return out

    def has_polynomial_coeffs(self) -> bool:
        return all(c.is_poly() for c in self.coeffs)

    def polynomial_coeffs(self) -> list[RatPoly]:
        """Coefficients as polynomials; raises if some coefficient is rational."""
        if not self.has_polynomial_coeffs():
            raise OreError("operator has non-polynomial coefficients")
        return [c.num for c in self.coeffs]

    def clear_denominators(self) -> tuple[DiffOp, RatPoly]:
        """Left-multiply by the lcm of coefficient denominators."""
        den = RatPoly.const(1)
        for c in self.coeffs:
            den = den * c.den.exact_div(den.gcd(c.den))
        return DiffOp(c * den for c in self.coeffs), den

    def bidegree(self) -> tuple[int, int]:
        """(max degree in x of the coefficients, order)."""
        ps = self.polynomial_coeffs()
        return max((p.degree for p in ps), default=-1), self.order

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            d = "" if i == 0 else ("Dx" if i == 1 else f"Dx^{i}")
            cs = c.to_str(var)
            if not d:
                parts.append(f"({cs})")
            elif c == ONE:
                parts.append(d)
            else:
                parts.append(f"({cs})*{d}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"DiffOp({self.to_str()})"

    __str__ = to_str


def diff_mul(a: DiffOp, b: DiffOp) -> DiffOp:
    return DiffOp(ore_mul(a.coeffs, b.coeffs, lambda c: c, lambda c: c.derivative()))


def diff_apply(L: DiffOp, derivs: Sequence[Callable[[float], float]]) -> Callable[[float], float]:
    """Action of L on f, given ``derivs = [f, f', f'', ...]`` (at least order+1)."""
    if len(derivs) < len(L.coeffs):
        raise ValueError(f"need {len(L.coeffs)} derivatives, got {len(derivs)}")
    coeffs = L.coeffs

    def g(t):
        total = 0.0
        for c, f in zip(coeffs, derivs):
            if c:
                total = total + float(c(Fraction(t) if isinstance(t, int) else t)) * f(t)
        return total

    return g


# ---------------------------------------------------------------------------
# recurrence operators


class RecOp:
    """Laurent recurrence operator ``sum_j coeffs[j - lo](n) * S^j``."""

    __slots__ = ("lo", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = (), lo: int = 0) -> None:
        cs = [_rf(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        k = 0
        while k < len(cs) and cs[k].is_zero():
            k += 1
        cs = cs[k:]
        self.coeffs: tuple[RatFunc, ...] = tuple(cs)
        self.lo = lo + k if cs else 0
        self._hash = None

    @classmethod
    def from_dict(cls, terms: Mapping[int, Scalar]) -> RecOp:
        terms = {j: c for j, c in terms.items() if _rf(c)}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(j, 0) for j in range(lo, hi + 1)], lo)

    @classmethod
    def S(cls, j: int = 1) -> RecOp:
        return cls([1], j)

    @classmethod
    def scalar(cls, c: Scalar) -> RecOp:
        return cls([c])

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """S-span hi - lo (the Euclidean degree); -1 for zero."""
        return len(self.coeffs) - 1

    order = degree

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def lead(self) -> RatFunc:
        return self.coeffs[-1]

    def trail(self) -> RatFunc:
        return self.coeffs[0]

    def coeff(self, j: int) -> RatFunc:
        k = j - self.lo
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def terms(self) -> dict[int, RatFunc]:
        return {self.lo + k: c for k, c in enumerate(self.coeffs) if c}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RecOp):
            return self.lo == other.lo and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, RatPoly, RatFunc)):
            return self == RecOp.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.lo, self.coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other) -> RecOp:
        if isinstance(other, RecOp):
            return other
        return RecOp.scalar(other)

    def __add__(self, other) -> RecOp:
        other = self._coerce(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [ZERO] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            out[self.lo - lo + k] = c
        for k, c in enumerate(other.coeffs):
            i = other.lo - lo + k
            out[i] = out[i] + c
        return RecOp(out, lo)

    __radd__ = __add__

    def __neg__(self) -> RecOp:
        return RecOp([-c for c in self.coeffs], self.lo)

    def __sub__(self, other) -> RecOp:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RecOp:
        return (-self) + other

    def __mul__(self, other) -> RecOp:
        if isinstance(other, RecOp):
            return rec_mul(self, other)
        # right multiplication by a scalar c(n): r_j(n) c(n+j) S^j
        c = _rf(other)
        if c.is_const():
            return RecOp([x * c for x in self.coeffs], self.lo)
        return RecOp([x * c.shift(self.lo + k) for k, x in enumerate(self.coeffs)], self.lo)

    def __rmul__(self, other) -> RecOp:
        c = _rf(other)
        return RecOp([c * x for x in self.coeffs], self.lo)

    def __pow__(self, e: int) -> RecOp:
        if e < 0:
            raise ValueError("negative power")
        out = RecOp.scalar(1)
        for _ in range(e):
            out = out * self
        return out

    def left_scale(self, c: Scalar) -> RecOp:
        """c(n) * self."""
        c = _rf(c)
        return RecOp([c * x for x in self.coeffs], self.lo)

    def shift(self, j: int) -> RecOp:
        """S^j * self."""
        if j == 0:
            return self
        return RecOp([c.shift(j) for c in self.coeffs], self.lo + j)

    def right_shift(self, j: int) -> RecOp:
        """self * S^j."""
        return RecOp(self.coeffs, self.lo + j) if self.coeffs else self

    # -- normal forms ------------------------------------------------------

    def normalizing_scalar(self) -> RatFunc:
        """Scalar c(n) making c*self polynomial, Z[n]-primitive, positive leading."""
        den = _lcm_dens(self.coeffs)
        nums = [c.num * den.exact_div(c.den) for c in self.coeffs]
        g: list[int] = []
        for p in nums:
            if p:
                g = _igcd(g, p.num) if g else _primitive(p.num)
                if len(g) == 1:
                    break
        gp = RatPoly._raw(g)
        factor = _int_scale([p.exact_div(gp) for p in nums])
        return RatFunc(den * factor, gp)

    def normalized(self) -> RecOp:
        """Canonical representative of the class {u*self : u a unit}.

        Support is moved to [0, m] by left multiplication with a power of S,
        then coefficients are made polynomial with trivial Z[n]-content and a
        positive leading integer coefficient.
        """
        if not self.coeffs:
            return self
        op = self.shift(-self.lo)
        c = op.normalizing_scalar()
        return op.left_scale(c)

    def int_normalized(self) -> tuple[RecOp, RatFunc]:
        """Shift to [0, m], clear denominators, remove the integer content only.

        Returns the operator and the left scalar applied after the shift.
        """
        op = self.shift(-self.lo)
        den = _lcm_dens(op.coeffs)
        nums = [c.num * den.exact_div(c.den) for c in op.coeffs]
        c = RatFunc(den * _int_scale(nums))
        return op.left_scale(c), c

    def right_monic(self) -> RecOp:
        """Canonical representative of {self*u : u a unit}: support [0, m], leading 1."""
        if not self.coeffs:
            return self
        op = self.right_shift(-self.lo)
        m = op.hi
        c = op.lead().inverse().shift(-m)
        return op * c

    def is_polynomial(self) -> bool:
        return all(c.is_poly() for c in self.coeffs)

    def bidegree(self) -> tuple[int, int]:
        """(max n-degree of polynomial coefficients, S-span)."""
        if not self.is_polynomial():
            raise OreError("bidegree needs polynomial coefficients")
        return max(c.num.degree for c in self.coeffs), self.degree

    def __call__(self, u, n: int):
        return rec_apply(self, u, [n])[0]

    # -- printing ----------------------------------------------------------

    def to_str(self, var: str = "n") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in self.terms().items():
            s = "" if j == 0 else ("S" if j == 1 else f"S^{j}" if j > 0 else f"S^({j})")
            cs = c.to_str(var)
            if not s:
                parts.append(f"({cs})")
            elif c == ONE:
                parts.append(s)
            else:
                parts.append(f"({cs})*{s}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"RecOp({self.to_str()})"

    __str__ = to_str


def _lcm_dens(coeffs: Iterable[RatFunc]) -> RatPoly:
    den = RatPoly.const(1)
    for c in coeffs:
        if not c.den.is_one():
            den = den * c.den.exact_div(den.gcd(c.den))
    return den


def _int_scale(polys: Sequence[RatPoly]) -> Fraction:
    """Rational f such that f*polys are integer polys with content 1, last one positive."""
    dd = 1
    for p in polys:
        dd = lcm(dd, p.den)
    ic = 0
    for p in polys:
        m = dd // p.den
        for v in p.num:
            ic = gcd(ic, v * m)
    f = Fraction(dd, ic)
    return -f if polys[-1].lc() < 0 else f


def rec_mul(a: RecOp, b: RecOp) -> RecOp:
    """Product in Q(n)<S, S^-1; S>, using S^j r(n) = r(n+j) S^j for all integers j."""
    if not a.coeffs or not b.coeffs:
        return RecOp()
    out = [ZERO] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        j = a.lo + i
        for k, bk in enumerate(b.coeffs):
            if bk:
                out[i + k] = out[i + k] + ai * bk.shift(j)
    return RecOp(out, a.lo + b.lo)


def rec_apply(op: RecOp, u, ns: Iterable[int]) -> list:
    """Values of (op . u)_n = sum_j r_j(n) u_{n+j} for n in ns.

    ``u`` is a sequence indexed from 0 or a callable; negative indices use the
    symmetric extension u_{-m} = u_m.
    """
    get = u if callable(u) else (lambda m: u[m])
    out = []
    for n in ns:
        total = 0
        for j, c in op.terms().items():
            try:
                coef = c(n)
            except ZeroDivisionError as exc:
                raise ZeroDivisorError(f"coefficient of S^{j} has a pole at n={n}") from exc
            if coef:
                total = total + _to_scalar(coef, u) * get(abs(n + j))
        out.append(total)
    return out


def _to_scalar(coef: Fraction, u):
    sample = u(0) if callable(u) else (u[0] if len(u) else 0)
    if isinstance(sample, (int, Fraction)):
        return coef
    if isinstance(sample, float):
        return float(coef)
    try:
        return type(sample)(coef.numerator) / coef.denominator
    except TypeError:
        return float(coef)


# ---------------------------------------------------------------------------
# Euclidean division


def rec_divmod_right(a: RecOp, b: RecOp) -> tuple[RecOp, RecOp]:
    """(q, r) with a = q*b + r and deg_S(r) < deg_S(b)."""
    if b.is_zero():
        raise ZeroDivisorError("zero divisor")
    q: dict[int, RatFunc] = {}
    r = a
    db = b.degree
    while r.coeffs and r.degree >= db:
        j = r.hi - b.hi
        t = r.lead() / b.lead().shift(j)
        q[j] = t
        r = r - RecOp([t * c.shift(j) for c in b.coeffs], b.lo + j)
    return RecOp.from_dict(q), r


def rec_divmod_left(a: RecOp, b: RecOp) -> tuple[RecOp, RecOp]:
    """(q, r) with a = b*q + r and deg_S(r) < deg_S(b)."""
    if b.is_zero():
        raise ZeroDivisorError("zero divisor")
    q: dict[int, RatFunc] = {}
    r = a
    db = b.degree
    while r.coeffs and r.degree >= db:
        j = r.hi - b.hi
        t = (r.lead() / b.lead()).shift(-b.hi)
        q[j] = t
        r = r - b * RecOp([t], j)
    return RecOp.from_dict(q), r


def right_divides(b: RecOp, a: RecOp) -> bool:
    return rec_divmod_right(a, b)[1].is_zero()


def left_divides(b: RecOp, a: RecOp) -> bool:
    return rec_divmod_left(a, b)[1].is_zero()


def exact_left_quotient(a: RecOp, g: RecOp) -> RecOp:
    """q with a = g*q; raises if g does not left-divide a."""
    q, r = rec_divmod_left(a, g)
    if r:
        raise OreError("not a left divisor")
    return q


def exact_right_quotient(a: RecOp, g: RecOp) -> RecOp:
    """q with a = q*g; raises if g does not right-divide a."""
    q, r = rec_divmod_right(a, g)
    if r:
        raise OreError("not a right divisor")
    return q


def xgcrd(a: RecOp, b: RecOp) -> tuple[RecOp, RecOp, RecOp, RecOp, RecOp]:
    """Extended right Euclid.

    Returns (g, u, v, s, t) with g = u*a + v*b and s*a + t*b = 0 where s*a is
    the lclm.  g is not normalized.
    """
    if a.is_zero() and b.is_zero():
        raise OreError("gcrd of two zero operators")
    one, zero = RecOp.scalar(1), RecOp()
    r0, r1 = a, b
    u0, v0, u1, v1 = one, zero, zero, one
    while r1.coeffs:
        q, r2 = rec_divmod_right(r0, r1)
        u2 = u0 - q * u1
        v2 = v0 - q * v1
        if r2.coeffs:
            c = r2.normalizing_scalar()
            r2, u2, v2 = r2.left_scale(c), u2.left_scale(c), v2.left_scale(c)
        r0, r1 = r1, r2
        u0, v0, u1, v1 = u1, v1, u2, v2
    return r0, u0, v0, u1, v1


def gcrd(a: RecOp, b: RecOp) -> RecOp:
    """Greatest common right divisor, normalized."""
    return xgcrd(a, b)[0].normalized()


def lclm(a: RecOp, b: RecOp) -> tuple[RecOp, RecOp, RecOp]:
    """(L, Qa, Qb) with L = Qa*a = Qb*b the least common left multiple (normalized)."""
    if a.is_zero():
        return RecOp(), RecOp.scalar(1), RecOp()
    if b.is_zero():
        return RecOp(), RecOp(), RecOp.scalar(1)
    _, _, _, s, t = xgcrd(a, b)
    L = s * a
    op = L.shift(-L.lo)
    c = op.normalizing_scalar()
    unit_shift = -L.lo
    qa = s.shift(unit_shift).left_scale(c)
    qb = (-t).shift(unit_shift).left_scale(c)
    return op.left_scale(c), qa, qb


def xgcld(a: RecOp, b: RecOp) -> tuple[RecOp, RecOp, RecOp, RecOp, RecOp]:
    """Extended left Euclid: g = a*u + b*v, a*s + b*t = 0 with a*s the lcrm."""
    if a.is_zero() and b.is_zero():
        raise OreError("gcld of two zero operators")
    one, zero = RecOp.scalar(1), RecOp()
    r0, r1 = a, b
    u0, v0, u1, v1 = one, zero, zero, one
    while r1.coeffs:
        q, r2 = rec_divmod_left(r0, r1)
        u2 = u0 - u1 * q
        v2 = v0 - v1 * q
        if r2.coeffs:
            # right unit making r2 right-monic, applied to the cofactors too
            unit = RecOp([r2.lead().inverse().shift(-r2.hi)], 0)
            r2, u2, v2 = r2 * unit, u2 * unit, v2 * unit
        r0, r1 = r1, r2
        u0, v0, u1, v1 = u1, v1, u2, v2
    return r0, u0, v0, u1, v1


def gcld(a: RecOp, b: RecOp) -> RecOp:
    """Greatest common left divisor, right-monic with support [0, m]."""
    return xgcld(a, b)[0].right_monic()


def lcrm(a: RecOp, b: RecOp) -> tuple[RecOp, RecOp, RecOp]:
    """(M, Pa, Pb) with M = a*Pa = b*Pb the least common right multiple (right-monic)."""
    if a.is_zero() or b.is_zero():
        return RecOp(), RecOp(), RecOp()
    _, _, _, s, t = xgcld(a, b)
    M = a * s
    unit = RecOp([M.lead().inverse().shift(-M.hi)], -M.lo)
    return M * unit, s * unit, (-t) * unit


def equal_up_to_left_unit(a: RecOp, b: RecOp) -> bool:
    return a.normalized() == b.normalized()


def equal_up_to_right_unit(a: RecOp, b: RecOp) -> bool:
    return a.right_monic() == b.right_monic()
