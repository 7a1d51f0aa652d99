"""Left fractions Q^-1 P of recurrence operators.

Sums and products reduce to a common denominator through lclm's and are not
reduced automatically; call :func:`frac_reduce` to get the irreducible form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import ZeroDivisorError
from .ore import RecOp, exact_left_quotient, gcld, lclm


@dataclass(frozen=True)
class RecFrac:
    """The fraction den^-1 * num."""

    den: RecOp
    num: RecOp

    def __post_init__(self) -> None:
        if self.den.is_zero():
            raise ZeroDivisorError("fraction with zero denominator")

    @classmethod
    def of(cls, num: RecOp, den: RecOp | None = None) -> RecFrac:
        return cls(den if den is not None else RecOp.scalar(1), num)

    @classmethod
    def zero(cls) -> RecFrac:
        return cls(RecOp.scalar(1), RecOp())

    @classmethod
    def one(cls) -> RecFrac:
        return cls(RecOp.scalar(1), RecOp.scalar(1))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_irreducible(self) -> bool:
        return gcld(self.num, self.den).is_unit()

    def __add__(self, other: RecFrac) -> RecFrac:
        return frac_add(self, other)

    def __neg__(self) -> RecFrac:
        return RecFrac(self.den, -self.num)

    def __sub__(self, other: RecFrac) -> RecFrac:
        return frac_add(self, -other)

    def __mul__(self, other: RecFrac) -> RecFrac:
        return frac_mul(self, other)

    def __repr__(self) -> str:
        return f"RecFrac(({self.den})^-1 * ({self.num}))"


def _as_frac(a) -> RecFrac:
    if isinstance(a, RecFrac):
        return a
    if not isinstance(a, RecOp):
        a = RecOp.scalar(a)
    return RecFrac.of(a)


def frac_equiv(a: RecFrac, b: RecFrac) -> bool:
    """True iff Qa~ Pa = Qb~ Pb where lclm(Qa, Qb) = Qa~ Qa = Qb~ Qb."""
    a, b = _as_frac(a), _as_frac(b)
    _, ta, tb = lclm(a.den, b.den)
    return ta * a.num == tb * b.num


def frac_add(a: RecFrac, b: RecFrac) -> RecFrac:
    a, b = _as_frac(a), _as_frac(b)
    L, ta, tb = lclm(a.den, b.den)
    return RecFrac(L, ta * a.num + tb * b.num)


def frac_mul(a: RecFrac, b: RecFrac) -> RecFrac:
    """(Q1^-1 P1)(Q2^-1 P2) = (P1^ Q1)^-1 (Q2^ P2) with lclm(Q2, P1) = Q2^ Q2 = P1^ P1."""
    a, b = _as_frac(a), _as_frac(b)
    if a.num.is_zero() or b.num.is_zero():
        return RecFrac.zero()
    _, q2h, p1h = lclm(b.den, a.num)
    return RecFrac(p1h * a.den, q2h * b.num)


def frac_inv(a: RecFrac) -> RecFrac:
    a = _as_frac(a)
    if a.num.is_zero():
        raise ZeroDivisorError("inverse of the zero fraction")
    return RecFrac(a.num, a.den)


def frac_reduce(a: RecFrac) -> RecFrac:
    """Irreducible form, numerator and denominator sharing one left unit normalization."""
    a = _as_frac(a)
    if a.num.is_zero():
        return RecFrac.zero()
    g = gcld(a.num, a.den)
    num = exact_left_quotient(a.num, g)
    den = exact_left_quotient(a.den, g)
    return normalize_pair(RecFrac(den, num))


def normalize_pair(a: RecFrac) -> RecFrac:
    """Apply one left unit to numerator and denominator.

    The numerator is shifted to support [0, m]; the common left scalar clears
    all denominators of both operators and removes their joint Z[n]-content.
    """
    if a.num.is_zero():
        return RecFrac.zero()
    j = -a.num.lo
    num, den = a.num.shift(j), a.den.shift(j)
    c = RecOp(num.coeffs + den.coeffs).normalizing_scalar()
    num, den = num.left_scale(c), den.left_scale(c)
    # sign: positive leading coefficient on the numerator
    if num.lead().num.lc() < 0:
        num, den = -num, -den
    return RecFrac(den, num)
