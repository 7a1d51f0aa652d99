"""Exact coefficient arithmetic: rationals, univariate polynomials, rational functions.

Rationals are :class:`fractions.Fraction`.  A :class:`RatPoly` is stored as a
tuple of integer numerators over one positive common denominator, which keeps
products and gcds in integer arithmetic.  A :class:`RatFunc` is a reduced
quotient with monic denominator.

Every scalar multiply/divide done by the polynomial routines is tallied in an
operation counter (see :func:`counting`), used by the benchmarks as a
machine-independent cost measure.
"""

from __future__ import annotations

import contextvars
from contextlib import contextmanager
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence, Union

Number = Union[int, Fraction]


class ZeroDivisorError(ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# operation counter


class OpCounter:
    __slots__ = ("ops",)

    def __init__(self) -> None:
        self.ops = 0


_counter: contextvars.ContextVar[OpCounter] = contextvars.ContextVar(
    "orecheb_ops", default=OpCounter()
)


def count_ops(k: int) -> None:
    _counter.get().ops += k


@contextmanager
def counting() -> Iterator[OpCounter]:
    """Collect scalar multiply/divide counts made inside the block."""
    c = OpCounter()
    token = _counter.set(c)
    try:
        yield c
    finally:
        _counter.reset(token)


# ---------------------------------------------------------------------------
# integer polynomial kernels (coefficient lists, lowest degree first)


def _strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _content(c: Sequence[int]) -> int:
    g = 0
    for v in c:
        g = gcd(g, v)
        if g == 1:
            break
    return g


def _primitive(c: Sequence[int]) -> list[int]:
    """Primitive part with positive leading coefficient."""
    g = _content(c)
    if g == 0:
        return []
    if c[-1] < 0:
        g = -g
    return [v // g for v in c]


def _imul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    count_ops(len(a) * len(b))
    if len(a) == 1:
        x = a[0]
        return [x * v for v in b]
    if len(b) == 1:
        x = b[0]
        return [x * v for v in a]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _iprem(a: list[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder of a by b (b nonzero), content removed."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        g = gcd(lr, lb)
        fr, fb = lb // g, lr // g
        count_ops(len(r) + len(b))
        r = [fr * v for v in r]
        for j, y in enumerate(b):
            r[shift + j] -= fb * y
        r.pop()
        _strip(r)
        if r:
            g = _content(r)
            if g > 1:
                r = [v // g for v in r]
    return r


def _igcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive gcd of two integer polynomials, positive leading coefficient."""
    a = _primitive(a)
    b = _primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        return [1]
    while b:
        r = _iprem(a, b)
        a, b = b, _primitive(r)
        if len(b) == 1:
            return [1]
    return _primitive(a)


def _idivexact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact quotient a/b over Z[x]; raises ArithmeticError if inexact."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return []
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        top = r[k + db]
        if top:
            t, rem = divmod(top, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            q[k] = t
            count_ops(len(b))
            for j, y in enumerate(b):
                r[k + j] -= t * y
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return q


def _itaylor_shift(c: Sequence[int], j: int) -> list[int]:
    """Coefficients of p(x + j)."""
    out = list(c)
    n = len(out)
    if j == 0 or n <= 1:
        return out
    count_ops(n * (n - 1) // 2)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            out[k] += j * out[k + 1]
    return out


# ---------------------------------------------------------------------------
# RatPoly


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class RatPoly:
    """Dense univariate polynomial with rational coefficients.

    Internally ``num[i] / den`` is the coefficient of ``x**i``; ``den > 0``
    and ``gcd(content(num), den) == 1``.  Instances are immutable.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, coeffs: Iterable[Number] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        d = 1
        for c in cs:
            d = _lcm(d, c.denominator)
        self._set([c.numerator * (d // c.denominator) for c in cs], d)

    def _set(self, num: list[int], den: int) -> None:
        _strip(num)
        if not num:
            self.num, self.den = (), 1
        else:
            g = gcd(_content(num), den)
            if den < 0:
                g = -g
            if g != 1:
                num = [v // g for v in num]
                den //= g
            self.num, self.den = tuple(num), den
        self._hash = None

    @classmethod
    def _raw(cls, num: list[int], den: int = 1) -> RatPoly:
        p = cls.__new__(cls)
        p._set(num, den)
        return p

    @classmethod
    def const(cls, c: Number) -> RatPoly:
        c = Fraction(c)
        return cls._raw([c.numerator], c.denominator)

    @classmethod
    def x(cls) -> RatPoly:
        return cls._raw([0, 1])

    # -- queries ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.num)

    @property
    def degree(self) -> int:
        return len(self.num) - 1

    def is_zero(self) -> bool:
        return not self.num

    def is_const(self) -> bool:
        return len(self.num) <= 1

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == 1

    def lc(self) -> Fraction:
        if not self.num:
            return Fraction(0)
        return Fraction(self.num[-1], self.den)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.num):
            return Fraction(self.num[i], self.den)
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPoly):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RatPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> RatPoly:
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> RatPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        d = _lcm(self.den, other.den)
        fa, fb = d // self.den, d // other.den
        a, b = self.num, other.num
        n = max(len(a), len(b))
        out = [0] * n
        for i, v in enumerate(a):
            out[i] = v * fa
        for i, v in enumerate(b):
            out[i] += v * fb
        return RatPoly._raw(out, d)

    __radd__ = __add__

    def __neg__(self) -> RatPoly:
        return RatPoly._raw([-v for v in self.num], self.den)

    def __sub__(self, other) -> RatPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> RatPoly:
        return (-self) + other

    def __mul__(self, other) -> RatPoly:
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            count_ops(len(self.num))
            return RatPoly._raw(
                [v * other.numerator for v in self.num], self.den * other.denominator
            )
        if not isinstance(other, RatPoly):
            return NotImplemented
        return RatPoly._raw(_imul(self.num, other.num), self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> RatPoly:
        if e < 0:
            raise ValueError("negative exponent")
        out, base = RatPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def divmod(self, other: RatPoly) -> tuple[RatPoly, RatPoly]:
        if not other.num:
            raise ZeroDivisorError("zero divisor")
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(r) - 1 < db:
            return RatPoly(), self
        inv = 1 / b[-1]
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            t = r[k + db] * inv
            q[k] = t
            if t:
                count_ops(len(b) + 1)
                for j, y in enumerate(b):
                    r[k + j] -= t * y
        return RatPoly(q), RatPoly(r[:db])

    def __divmod__(self, other):
        return self.divmod(self._coerce(other))

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: RatPoly) -> RatPoly:
        """Quotient when ``other`` divides ``self`` exactly."""
        if not other.num:
            raise ZeroDivisorError("zero divisor")
        if len(other.num) == 1:
            return self * Fraction(other.den, other.num[0])
        bp = _primitive(other.num)
        scale = Fraction(other.num[-1], other.den) / bp[-1]
        q = _idivexact(self.num, bp)
        return RatPoly._raw(q, self.den) * (1 / scale)

    def content(self) -> Fraction:
        """Positive rational c with self/c a primitive integer polynomial."""
        if not self.num:
            return Fraction(0)
        return Fraction(_content(self.num), self.den)

    def primitive(self) -> RatPoly:
        """Primitive integer polynomial with positive leading coefficient."""
        return RatPoly._raw(_primitive(self.num))

    def monic(self) -> RatPoly:
        if not self.num:
            return self
        lc = self.num[-1]
        return RatPoly._raw(list(self.num), lc)

    def gcd(self, other: RatPoly) -> RatPoly:
        """Monic gcd (zero only if both are zero)."""
        if len(self.num) == 1 or len(other.num) == 1:
            return RatPoly.const(1)
        g = _igcd(self.num, other.num)
        if not g:
            return RatPoly()
        return RatPoly._raw(g, g[-1])

    def derivative(self) -> RatPoly:
        count_ops(len(self.num))
        return RatPoly._raw([i * v for i, v in enumerate(self.num)][1:], self.den)

    def shift(self, j: int) -> RatPoly:
        """p(x + j) for an integer j."""
        if j == 0 or len(self.num) <= 1:
            return self
        return RatPoly._raw(_itaylor_shift(self.num, j), self.den)

    def __call__(self, t):
        """Evaluate at t (int/Fraction exactly; floats and others by Horner)."""
        count_ops(len(self.num))
        if isinstance(t, int):
            acc = 0
            for v in reversed(self.num):
                acc = acc * t + v
            return Fraction(acc, self.den)
        if isinstance(t, Fraction):
            p, q = t.numerator, t.denominator
            acc, qp = 0, 1
            for v in reversed(self.num):
                acc = acc * p + v * qp
                qp *= q
            # acc = q^deg * den * p(t)
            return Fraction(acc, self.den * (qp // q if self.num else 1))
        acc = 0 * t
        for v in reversed(self.num):
            acc = acc * t + v
        return acc / self.den

    def compose(self, other: RatPoly) -> RatPoly:
        out = RatPoly()
        for c in reversed(self.coeffs):
            out = out * other + c
        return out

    # -- printing ----------------------------------------------------------

    def to_str(self, var: str = "x") -> str:
        if not self.num:
            return "0"
        terms = []
        for i in range(len(self.num) - 1, -1, -1):
            c = Fraction(self.num[i], self.den)
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"RatPoly({self.to_str()})"

    __str__ = to_str


# ---------------------------------------------------------------------------
# interpolation and the evaluation–interpolation product


def interpolate(xs: Sequence[Number], ys: Sequence[Number]) -> RatPoly:
    """Unique polynomial of degree < len(xs) through the points (Newton form)."""
    n = len(xs)
    if n != len(ys):
        raise ValueError("length mismatch")
    if len(set(xs)) != n:
        raise ValueError("interpolation nodes must be distinct")
    xs = [Fraction(v) for v in xs]
    dd = [Fraction(v) for v in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
        count_ops(n - j)
    # expand Newton form by Horner
    out = [Fraction(0)] * n
    out_len = 0
    for i in range(n - 1, -1, -1):
        # out = out * (x - xs[i]) + dd[i]
        new = [Fraction(0)] * (out_len + 1)
        for k in range(out_len):
            new[k + 1] += out[k]
            new[k] -= xs[i] * out[k]
        count_ops(out_len)
        new[0] += dd[i]
        out, out_len = new + [Fraction(0)] * (n - len(new)), out_len + 1
    return RatPoly(out[:n])


def interpolate_consecutive(start: int, ys: Sequence[Number]) -> RatPoly:
    """Interpolate at the integers start, start+1, ... via forward differences."""
    n = len(ys)
    diffs = [Fraction(v) for v in ys]
    # Newton forward differences: p(start + t) = sum_j Δ^j y_0 * C(t, j)
    newton = []
    for j in range(n):
        newton.append(diffs[0])
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    # sum_j Δ^j / j! * t(t-1)...(t-j+1), then substitute t = x - start
    acc = RatPoly()
    fall = RatPoly.const(1)
    fact = 1
    t = RatPoly.x()
    for j, dj in enumerate(newton):
        if j:
            fall = fall * (t - (j - 1))
            fact *= j
        if dj:
            acc = acc + fall * (dj / fact)
    return acc.shift(-start)


def mul_evalinterp(a: RatPoly, b: RatPoly, start: int = 0) -> RatPoly:
    """Product a*b by evaluation at consecutive integers and interpolation."""
    if a.is_zero() or b.is_zero():
        return RatPoly()
    npts = a.degree + b.degree + 1
    pts = range(start, start + npts)
    return interpolate_consecutive(start, [a(t) * b(t) for t in pts])


# ---------------------------------------------------------------------------
# RatFunc


class RatFunc:
    """Reduced rational function num/den with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _reduced: bool = False) -> None:
        num = num if isinstance(num, RatPoly) else RatPoly.const(num)
        den = den if isinstance(den, RatPoly) else RatPoly.const(den)
        if den.is_zero():
            raise ZeroDivisorError("zero denominator")
        if not _reduced:
            if num.is_zero():
                den = RatPoly.const(1)
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                lc = den.lc()
                if lc != 1:
                    num = num * (1 / lc)
                    den = den.monic()
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, num: RatPoly, den: RatPoly) -> RatFunc:
        f = cls.__new__(cls)
        f.num, f.den, f._hash = num, den, None
        return f

    @classmethod
    def coerce(cls, v) -> RatFunc:
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, RatPoly):
            return cls._make(v, _ONE_POLY)
        if isinstance(v, (int, Fraction)):
            return cls._make(RatPoly.const(v), _ONE_POLY)
        raise TypeError(f"cannot coerce {type(v).__name__} to RatFunc")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_one()

    def is_const(self) -> bool:
        return self.den.is_one() and self.num.is_const()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, RatPoly)):
            return self == RatFunc.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __add__(self, other) -> RatFunc:
        o = other if isinstance(other, RatFunc) else RatFunc.coerce(other)
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.is_one() and d.is_one():
            return RatFunc._make(a + c, b)
        if b == d:
            num = a + c
            if num.is_zero():
                return _ZERO
            h = num.gcd(b)
            if h.is_one():
                return RatFunc._make(num, b)
            return RatFunc(num.exact_div(h), b.exact_div(h), _reduced=False)
        g = b.gcd(d)
        if g.is_one():
            return RatFunc._make(a * d + c * b, b * d)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        num = a * d1 + c * b1
        if num.is_zero():
            return _ZERO
        h = num.gcd(g)
        if not h.is_one():
            num = num.exact_div(h)
            g = g.exact_div(h)
        return RatFunc._make(num, b1 * d1 * g)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc._make(-self.num, self.den)

    def __sub__(self, other) -> RatFunc:
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other) -> RatFunc:
        return RatFunc.coerce(other) + (-self)

    def __mul__(self, other) -> RatFunc:
        if isinstance(other, (int, Fraction)):
            if not other:
                return _ZERO
            return RatFunc._make(self.num * other, self.den)
        o = other if isinstance(other, RatFunc) else RatFunc.coerce(other)
        if self.num.is_zero() or o.num.is_zero():
            return _ZERO
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.is_one() and d.is_one():
            return RatFunc._make(a * c, b)
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a, d = a.exact_div(g1), d.exact_div(g1)
        if not g2.is_one():
            c, b = c.exact_div(g2), b.exact_div(g2)
        return RatFunc._make(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroDivisorError("inverse of zero")
        lc = self.num.lc()
        return RatFunc._make(self.den * (1 / lc), self.num.monic())

    def __truediv__(self, other) -> RatFunc:
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other) -> RatFunc:
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> RatFunc:
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc._make(self.num**e, self.den**e)

    def normalize(self) -> RatFunc:
        return RatFunc(self.num, self.den)

    def shift(self, j: int) -> RatFunc:
        if j == 0:
            return self
        return RatFunc._make(self.num.shift(j), self.den.shift(j))

    def derivative(self) -> RatFunc:
        if self.den.is_one():
            return RatFunc._make(self.num.derivative(), self.den)
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, t):
        dv = self.den(t)
        if dv == 0:
            raise ZeroDivisorError(f"pole at {t}")
        return self.num(t) / dv

    def to_str(self, var: str = "n") -> str:
        if self.den.is_one():
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"

    def __repr__(self) -> str:
        return f"RatFunc({self.to_str()})"

    __str__ = to_str


_ONE_POLY = RatPoly.const(1)
_ZERO = RatFunc._make(RatPoly(), _ONE_POLY)
ONE = RatFunc._make(_ONE_POLY, _ONE_POLY)
ZERO = _ZERO
