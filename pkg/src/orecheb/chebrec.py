"""Recurrences for Chebyshev coefficients of solutions of linear ODEs.

The algebra morphism sends ``x -> X = (S + S^-1)/2`` and
``Dx -> D = (S^-1 - S)^-1 (2n)``.  A differential operator L is mapped to a
fraction of recurrence operators whose numerator annihilates the Chebyshev
coefficients of solutions (under analytic hypotheses not checked here).

Four algorithms are provided:

* :func:`lewanowicz`  -- Horner evaluation with fraction arithmetic, irreducible output;
* :func:`paszkowski`  -- ``I^k phi(L) = sum I^(k-i) q_i(X)`` from the integral form of L;
* :func:`rebillard`   -- ``sum p_i(X_k) I^(k-i)`` with ``X_k = I^k X D^k``;
* :func:`dac`         -- divide and conquer on Paszkowski's sum with an
  evaluation/interpolation product by powers of I.

The last three compute the same operator ``I^k phi(L)`` where ``I = D^-1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .field import RatFunc, RatPoly, count_ops, interpolate_consecutive
from .fraction import RecFrac, frac_add, frac_mul, normalize_pair
from .ore import (
    DiffOp,
    OreError,
    RecOp,
    exact_left_quotient,
    gcld,
    lclm,
)

HYPOTHESIS_NOTE = (
    "The recurrence annihilates the Chebyshev coefficients of a solution f only "
    "under analytic conditions on f near +-1 (convergence of the weighted integral "
    "of f^(k), or of (1-x^2)^k f^(k) together with (1-x^2)^i | p_i). These are not "
    "checked. Counterexample: arccos is annihilated by (1-x^2)Dx^2 - x*Dx, whose "
    "image has numerator n^2, yet its coefficients do not vanish."
)


class InternalConsistencyError(OreError):
    """A computed quantity broke a proven structural bound."""


class Algorithm(str, enum.Enum):
    LEWANOWICZ = "lewanowicz"
    PASZKOWSKI = "paszkowski"
    REBILLARD = "rebillard"
    DAC = "dac"


_N = RatPoly.x()
SIGMA = RecOp.from_dict({-1: 1, 1: -1})  # S^-1 - S
X_OP = RecOp.from_dict({-1: Fraction(1, 2), 1: Fraction(1, 2)})
I_OP = RecOp.from_dict({-1: RatFunc(1, 2 * _N), 1: RatFunc(-1, 2 * _N)})
D_FRAC = RecFrac(SIGMA, RecOp.scalar(2 * _N))


@dataclass(frozen=True)
class ChebSymbols:
    X: RecOp = X_OP
    D: RecFrac = D_FRAC
    I: RecOp = I_OP


@dataclass
class RecurrenceResult:
    """Output of one algorithm.

    ``operator`` is the canonical numerator: support [0, order], polynomial
    coefficients without common factor in Z[n], positive leading coefficient.
    ``numerator``/``denominator`` hold the fraction pair (Lewanowicz only)
    before the polynomial content of the numerator is divided out.
    """

    operator: RecOp
    algorithm: Algorithm
    numerator: RecOp | None = None
    denominator: RecOp | None = None
    hypothesis_note: str = HYPOTHESIS_NOTE
    h_prime_form: bool = False
    prescale: RatPoly = field(default_factory=lambda: RatPoly.const(1))
    raw: RecOp | None = None

    @property
    def order(self) -> int:
        return self.operator.degree


# ---------------------------------------------------------------------------
# morphism


def phi_polynomial(p: RatPoly) -> RecOp:
    """p(X) with X = (S + S^-1)/2; support [-deg p, deg p]."""
    terms: dict[int, Fraction] = {}
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        scale = c / 2**i
        for j in range(i + 1):
            e = 2 * j - i
            terms[e] = terms.get(e, Fraction(0)) + scale * comb(i, j)
    count_ops(sum(i + 1 for i in range(len(p))))
    return RecOp.from_dict(terms)


def phi_fraction(L: DiffOp) -> RecFrac:
    """phi(L) as a (non-reduced) fraction, by Horner's rule in D."""
    ps = _polys(L)
    acc = RecFrac.of(phi_polynomial(ps[-1]))
    for p in reversed(ps[:-1]):
        acc = frac_add(frac_mul(acc, D_FRAC), RecFrac.of(phi_polynomial(p)))
    return acc


def _polys(L: DiffOp) -> list[RatPoly]:
    if L.is_zero():
        raise OreError("zero operator")
    return L.polynomial_coeffs()


def _prepare(L: DiffOp) -> tuple[list[RatPoly], RatPoly]:
    if L.is_zero():
        raise OreError("zero operator")
    if L.has_polynomial_coeffs():
        return L.polynomial_coeffs(), RatPoly.const(1)
    L2, den = L.clear_denominators()
    return L2.polynomial_coeffs(), den


def h_prime_form(ps: list[RatPoly]) -> bool:
    """Syntactic half of (H'): (1 - x^2)^i divides p_i for every i."""
    w = RatPoly([1, 0, -1])
    for i, p in enumerate(ps):
        if p and not (p % (w**i)).is_zero():
            return False
    return True


def _result(raw: RecOp, algo: Algorithm, ps, scale, **kw) -> RecurrenceResult:
    return RecurrenceResult(
        operator=raw.normalized(),
        algorithm=algo,
        h_prime_form=h_prime_form(ps),
        prescale=scale,
        raw=raw,
        **kw,
    )


# ---------------------------------------------------------------------------
# Lewanowicz


def lewanowicz(L: DiffOp) -> RecurrenceResult:
    """Irreducible Q^-1 P = phi(L) by Horner's rule, with lclm's against S^-1 - S."""
    ps, scale = _prepare(L)
    k = len(ps) - 1
    P = phi_polynomial(ps[k])
    Q = RecOp.scalar(1)
    two_n = RatFunc(2 * _N)
    for i in range(k - 1, -1, -1):
        _, U_hat, P_hat = lclm(SIGMA, P)  # lclm = U^ (S^-1 - S) = P^ P
        Q = P_hat * Q
        P = U_hat * two_n + Q * phi_polynomial(ps[i])
        # one left scalar on both keeps sizes down
        c = RecOp(P.coeffs + Q.coeffs).normalizing_scalar()
        P, Q = P.left_scale(c), Q.left_scale(c)
    pair = normalize_pair(RecFrac(Q, P))
    return _result(
        pair.num, Algorithm.LEWANOWICZ, ps, scale, numerator=pair.num, denominator=pair.den
    )


# ---------------------------------------------------------------------------
# integral form and powers of I


def to_integral_form(L: DiffOp) -> list[RatPoly]:
    """q_0..q_k with L = sum_i Dx^i q_i(x)."""
    ps = list(_polys(L))
    k = len(ps) - 1
    q = [RatPoly()] * (k + 1)
    for i in range(k, -1, -1):
        qi = ps[i] if i < len(ps) else RatPoly()
        q[i] = qi
        if qi.is_zero():
            continue
        # subtract Dx^i qi = sum_l C(i, l) qi^(l) Dx^(i-l)
        der = qi
        for l in range(i + 1):
            ps[i - l] = ps[i - l] - der * comb(i, l)
            der = der.derivative()
    return q


def r_poly(i: int) -> RatPoly:
    """2^i n prod_{k=1}^{i-1} (n^2 - k^2)."""
    out = RatPoly([0, 2**i])
    for k in range(1, i):
        out = out * RatPoly([-(k * k), 0, 1])
    return out


def _poch(a: RatPoly, m: int) -> RatPoly:
    out = RatPoly.const(1)
    for j in range(m):
        out = out * (a + j)
    return out


def i_power_scaled(i: int) -> tuple[RecOp, RatPoly]:
    """(r(i) I^i, r(i)) with r(i) I^i having polynomial coefficients."""
    if i < 1:
        raise ValueError("i must be >= 1")
    terms: dict[int, RatPoly] = {}
    # uniform in k = 0..i with (a)_{-1} = 1/(a-1); the endpoints are written out
    terms[-i] = _poch(_N + 1, i - 1)
    for k in range(1, i):
        s = (_N + (2 * k - i)) * _poch(_N + (k + 1), i - 1 - k) * _poch(_N + (1 - i), k - 1)
        terms[-i + 2 * k] = s * ((-1) ** k * comb(i, k))
    terms[i] = _poch(_N + (1 - i), i - 1) * (-1) ** i
    return RecOp.from_dict(terms), r_poly(i)


def i_power_closed_form(i: int) -> RecOp:
    scaled, r = i_power_scaled(i)
    return scaled.left_scale(RatFunc(1, r))


# ---------------------------------------------------------------------------
# Paszkowski and Rebillard


def paszkowski(L: DiffOp) -> RecurrenceResult:
    ps, scale = _prepare(L)
    k = len(ps) - 1
    q = to_integral_form(DiffOp(ps))
    R = phi_polynomial(q[k])
    Ii = RecOp.scalar(1)
    for i in range(1, k + 1):
        Ii = I_OP * Ii
        if q[k - i]:
            R = R + Ii * phi_polynomial(q[k - i])
    return _result(R, Algorithm.PASZKOWSKI, ps, scale)


def x_k(k: int) -> RecOp:
    """X_k = I^k X D^k = (2n)^-1 ((n+k) S + (n-k) S^-1)."""
    inv = RatFunc(1, 2 * _N)
    return RecOp.from_dict({1: inv * RatFunc(_N + k), -1: inv * RatFunc(_N - k)})


def rebillard(L: DiffOp) -> RecurrenceResult:
    ps, scale = _prepare(L)
    k = len(ps) - 1
    Xk = x_k(k)

    def at_xk(p: RatPoly) -> RecOp:
        acc = RecOp()
        for c in reversed(p.coeffs):
            acc = acc * Xk + c
        return acc

    R = at_xk(ps[k])
    Ii = RecOp.scalar(1)
    for i in range(1, k + 1):
        Ii = I_OP * Ii
        if ps[k - i]:
            R = R + at_xk(ps[k - i]) * Ii
    return _result(R, Algorithm.REBILLARD, ps, scale)


# ---------------------------------------------------------------------------
# divide and conquer


class _IPowerData:
    """r(l) I^l and its values at the evaluation points, computed once per l."""

    def __init__(self, ell: int, start: int, npts: int) -> None:
        self.scaled, self.r = i_power_scaled(ell)
        pts = range(start, start + npts)
        self.values = {
            u: [c.num(p) for p in pts] for u, c in self.scaled.terms().items()
        }
        self.r_vals = [self.r(p) for p in pts]


def fast_mul_blocks(ell: int, d: int) -> list[tuple[int, int]]:
    """S-exponent ranges [lo, hi] of the blocks cut from the support [-ell-d, ell+d]."""
    lo_bound, hi_bound = -ell - d, ell + d
    width = 2 * ell + 1
    return [
        (off, min(off + width - 1, hi_bound))
        for off in range(lo_bound, hi_bound + 1, width)
    ]


def fast_mul_by_I_power(
    ell: int, P: RecOp, d: int, cache: dict | None = None, check: bool = True
) -> RecOp:
    """I^ell * P for P = sum_{i<=ell} I^i a_i(X) with deg a_i <= d.

    P is cut into blocks of S-degree <= 2*ell, each block is multiplied by
    r(ell) I^ell pointwise at integers n = 2*ell, 2*ell+1, ..., the block
    products are accumulated at each point and r(2 ell) I^ell P, whose
    coefficients are polynomials of degree <= 3*ell - 1, is interpolated.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if P.is_zero():
        return P
    lo_bound, hi_bound = -ell - d, ell + d
    if P.lo < lo_bound or P.hi > hi_bound:
        raise InternalConsistencyError(
            f"support [{P.lo},{P.hi}] outside [{lo_bound},{hi_bound}]"
        )
    deg_bound = 3 * ell - 1
    npts = deg_bound + 1 + (1 if check else 0)
    start = 2 * ell
    key = (ell, start, npts)
    if cache is not None and key in cache:
        data = cache[key]
    else:
        data = _IPowerData(ell, start, npts)
        if cache is not None:
            cache[key] = data

    out_lo, out_hi = lo_bound - ell, hi_bound + ell
    acc = [[Fraction(0)] * npts for _ in range(out_hi - out_lo + 1)]
    # values of each coefficient of P on the shifted window
    wlo = start - ell
    whi = start + npts - 1 + ell
    for blo, bhi in fast_mul_blocks(ell, d):
        block = [(t, P.coeff(t)) for t in range(blo, bhi + 1) if P.coeff(t)]
        if not block:
            continue
        vals = {
            t: [c(m) for m in range(wlo, whi + 1)] for t, c in block
        }
        for u, bu in data.values.items():
            for t, _ in block:
                vt = vals[t]
                row = acc[u + t - out_lo]
                base = u + start - wlo
                for p in range(npts):
                    row[p] += bu[p] * vt[p + base]
                count_ops(npts)
    # r(2l) I^l P = (r(2l)/r(l)) * sum ...
    r2 = r_poly(2 * ell)
    ratio = [r2(start + p) / data.r_vals[p] for p in range(npts)]
    count_ops(2 * npts)
    coeffs = {}
    for w_idx, row in enumerate(acc):
        ys = [row[p] * ratio[p] for p in range(npts)]
        count_ops(npts)
        if not any(ys):
            continue
        poly = interpolate_consecutive(start, ys[: deg_bound + 1])
        if check and poly(start + npts - 1) != ys[-1]:
            raise InternalConsistencyError(
                f"coefficient of S^{w_idx + out_lo} exceeds n-degree {deg_bound}"
            )
        coeffs[w_idx + out_lo] = RatFunc(poly, r2)
    return RecOp.from_dict(coeffs)


def _dac_rec(a: list[RatPoly], d: int, cache: dict) -> RecOp:
    k = len(a) - 1
    if k == 0:
        return phi_polynomial(a[0])
    ell = -(-k // 2)
    low = _dac_rec(a[:ell], d, cache)
    high = _dac_rec(a[ell:], d, cache)
    return low + fast_mul_by_I_power(ell, high, d, cache)


def dac(L: DiffOp) -> RecurrenceResult:
    ps, scale = _prepare(L)
    k = len(ps) - 1
    q = to_integral_form(DiffOp(ps))
    d = max((p.degree for p in q), default=0)
    a = [q[k - i] for i in range(k + 1)]
    R = _dac_rec(a, max(d, 0), {})
    return _result(R, Algorithm.DAC, ps, scale)


def i_k_phi(a: list[RatPoly]) -> RecOp:
    """sum_i I^i a_i(X) by direct products, used as an oracle."""
    out = RecOp()
    Ii = RecOp.scalar(1)
    for i, ai in enumerate(a):
        if i:
            Ii = I_OP * Ii
        out = out + Ii * phi_polynomial(ai)
    return out


# ---------------------------------------------------------------------------
# post-processing


def reduce_order(R: RecurrenceResult, k: int) -> RecurrenceResult:
    """Left-divide I^k phi(L) by its gcld with I^k.

    Works on ``R.raw`` (the exact I^k phi(L)): left units change left
    divisors, so the normalized operator would give a different gcld.
    Lewanowicz output is already an irreducible fraction and is returned as is.
    """
    if k < 1 or R.algorithm is Algorithm.LEWANOWICZ:
        return R
    A = R.raw if R.raw is not None else R.operator
    g = gcld(A, i_power_closed_form(k))
    B = exact_left_quotient(A, g)
    return RecurrenceResult(
        operator=B.normalized(),
        algorithm=R.algorithm,
        hypothesis_note=R.hypothesis_note,
        h_prime_form=R.h_prime_form,
        prescale=R.prescale,
        raw=B,
    )


ALGORITHMS = {
    Algorithm.LEWANOWICZ: lewanowicz,
    Algorithm.PASZKOWSKI: paszkowski,
    Algorithm.REBILLARD: rebillard,
    Algorithm.DAC: dac,
}


def run_algorithm(name: str | Algorithm, L: DiffOp) -> RecurrenceResult:
    return ALGORITHMS[Algorithm(name)](L)
