"""Numerical side: Chebyshev coefficients, recurrence checks, forward solving.

Coefficients follow the starred convention: ``f = c_0/2 + sum_{n>=1} c_n T_n``,
so ``c_0`` is the full integral ``(2/pi) int f T_0 / sqrt(1-x^2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
import scipy.fft
import scipy.special

from .field import RatPoly
from .ore import DiffOp, RecOp

_x = RatPoly.x()


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogFunction:
    name: str
    evaluator: Callable[[np.ndarray], np.ndarray]
    defining_operator: DiffOp
    known_coeffs: Callable[[int], float] | None = None
    # operator handed to the algorithms when verifying (defaults to defining_operator)
    verify_operator: DiffOp | None = None
    # "quadrature" or "closed_form": endpoint singularities make quadrature
    # converge algebraically, too slowly for the verification tolerance
    coeff_source: str = "quadrature"
    nodes: int = 4096
    tol: float = 1e-8
    parity: str | None = None  # "odd", "even" or None
    description: str = ""

    @property
    def operator_for_verification(self) -> DiffOp:
        return self.verify_operator or self.defining_operator


@dataclass
class CoeffSeq:
    values: list
    convention: str = "starred"  # c_0 is the full integral; c_{-n} = c_n

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int):
        return self.values[abs(n)]

    @property
    def N(self) -> int:
        return len(self.values) - 1


@dataclass
class AnnihilationReport:
    passed: bool
    max_residual: float
    tol: float
    rows_checked: int
    rows_skipped: int
    n_min: int
    n_max: int
    worst_n: int | None = None
    residuals: dict[int, float] = field(default_factory=dict)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status}: max relative residual {self.max_residual:.3e} (tol {self.tol:.1e}) "
            f"over {self.rows_checked} rows n={self.n_min}..{self.n_max}, "
            f"{self.rows_skipped} rows below the noise floor"
        )


@dataclass
class ForwardSolution:
    values: list
    amplification: float
    unstable: bool

    def __getitem__(self, n: int):
        return self.values[n]


# ---------------------------------------------------------------------------
# coefficients


def cheb_nodes(M: int) -> np.ndarray:
    j = np.arange(M)
    return np.cos((2 * j + 1) * np.pi / (2 * M))


def cheb_coeffs(f: CatalogFunction | Callable, N: int, M: int | None = None) -> CoeffSeq:
    """c_0..c_N by Gauss-Chebyshev quadrature at M interior nodes (DCT-II)."""
    if N < 4:
        raise SeriesError("N must be >= 4")
    evaluator = f.evaluator if isinstance(f, CatalogFunction) else f
    if M is None:
        M = f.nodes if isinstance(f, CatalogFunction) else 4096
    M = max(M, 2 * N)
    xs = cheb_nodes(M)
    with np.errstate(all="ignore"):
        vals = np.asarray(evaluator(xs), dtype=float)
    bad = np.flatnonzero(~np.isfinite(vals))
    if bad.size:
        j = int(bad[0])
        raise SeriesError(f"non-finite value at node j={j}, x={xs[j]!r}")
    c = scipy.fft.dct(vals, type=2) / M
    return CoeffSeq([float(v) for v in c[: N + 1]])


def known_coeffs(f: CatalogFunction, N: int) -> CoeffSeq:
    if f.known_coeffs is None:
        raise SeriesError(f"{f.name} has no closed-form coefficients")
    return CoeffSeq([float(f.known_coeffs(n)) for n in range(N + 1)])


def coefficients_for(f: CatalogFunction, N: int) -> CoeffSeq:
    if f.coeff_source == "closed_form":
        return known_coeffs(f, N)
    return cheb_coeffs(f, N)


# ---------------------------------------------------------------------------
# recurrence checks


def default_n_min(P: RecOp, N: int) -> int:
    """Smallest n >= 1 such that no coefficient has a pole at n..N."""
    n0 = max(1, -P.lo)
    for c in P.coeffs:
        if c.is_poly():
            continue
        for n in range(n0, N + 1):
            if c.den(n) == 0:
                n0 = max(n0, n + 1)
    return n0


def verify_annihilation(
    P: RecOp,
    c: CoeffSeq | Sequence[float],
    n_min: int | None = None,
    tol: float = 1e-8,
    noise: float = 1e-15,
) -> AnnihilationReport:
    """Relative residual of P applied to c on n_min..N-hi.

    Row n has terms t_j = r_j(n) c_{n+j}; its residual is
    |sum t_j| / (max |t_j| + eps).  A row whose terms are all so small that
    rounding noise (``noise * max|c| * sum|r_j(n)|``) exceeds ``tol`` times
    their size cannot be resolved in double precision and is skipped; the
    count is reported.
    """
    vals = c.values if isinstance(c, CoeffSeq) else list(c)
    N = len(vals) - 1
    if n_min is None:
        n_min = default_n_min(P, N)
    n_max = N - P.hi
    if n_max < n_min:
        raise SeriesError(f"empty verification window n={n_min}..{n_max}")
    cmax = max(abs(float(v)) for v in vals) or 1.0
    eps = 1e-300
    terms = P.terms()
    worst, worst_n = 0.0, None
    checked = skipped = 0
    residuals = {}
    for n in range(n_min, n_max + 1):
        row = []
        rsum = 0.0
        for j, r in terms.items():
            rv = float(r(n))
            rsum += abs(rv)
            row.append(rv * float(vals[abs(n + j)]))
        scale = max(abs(t) for t in row)
        if scale * tol < noise * cmax * rsum:
            skipped += 1
            continue
        res = abs(math.fsum(row)) / (scale + eps)
        residuals[n] = res
        checked += 1
        if worst_n is None or res > worst:
            worst, worst_n = res, n
    passed = checked > 0 and worst <= tol
    return AnnihilationReport(
        passed, worst, tol, checked, skipped, n_min, n_max, worst_n, residuals
    )


def solve_forward(P: RecOp, initial: Sequence, N: int) -> ForwardSolution:
    """Unroll c_{n+m} = -(sum_{j<m} r_j(n) c_{n+j}) / r_m(n) from c_0..c_{m-1}.

    Works in the number type of ``initial`` (Fraction for exact arithmetic,
    float, or mpmath.mpf).  ``amplification`` estimates how much the dominant
    solution of the recurrence outgrows the computed one at N; large values
    flag an unstable forward direction.
    """
    if P.lo != 0:
        P = P.shift(-P.lo)
    m = P.hi
    if len(initial) != m:
        raise SeriesError(f"need {m} initial values, got {len(initial)}")
    coeffs = [P.coeff(j) for j in range(m + 1)]
    sample = initial[0] if initial else 0
    exact = all(isinstance(v, (int, Fraction)) for v in initial)

    def conv(q: Fraction):
        if exact:
            return q
        if isinstance(sample, float):
            return float(q)
        return type(sample)(q.numerator) / q.denominator

    vals = list(initial)
    basis = [[1.0 if i == j else 0.0 for i in range(m)] for j in range(m)]
    for n in range(0, N - m + 1):
        lead = coeffs[m](n)
        if lead == 0:
            raise SeriesError(f"leading coefficient vanishes at n={n}")
        acc = 0
        for j in range(m):
            rj = coeffs[j](n)
            if rj:
                acc = acc + conv(rj) * vals[n + j]
        vals.append(-acc / conv(lead))
        fl = [float(coeffs[j](n)) / float(lead) for j in range(m)]
        for b in basis:
            b.append(-sum(fl[j] * b[n + j] for j in range(m)))
    dominant = max(max(abs(v) for v in b[-m:]) for b in basis) if m else 1.0
    size = max(abs(float(v)) for v in vals[-m:]) if m else 1.0
    start = max((abs(float(v)) for v in initial), default=1.0) or 1.0
    amp = dominant * start / size if size else math.inf
    return ForwardSolution(vals, amp, amp * 2.2e-16 > 1e-8)


def truncated_eval(c: CoeffSeq | Sequence[float], x: float) -> float:
    """Clenshaw evaluation of c_0/2 + sum_{n>=1} c_n T_n(x)."""
    vals = c.values if isinstance(c, CoeffSeq) else list(c)
    b1 = b2 = 0.0
    for ck in reversed(vals[1:]):
        b1, b2 = ck + 2 * x * b1 - b2, b1
    return vals[0] / 2 + x * b1 - b2


# ---------------------------------------------------------------------------
# catalog


def _odd(rule: Callable[[int], float]) -> Callable[[int], float]:
    return lambda n: rule(n) if n % 2 else 0.0


def _arctan_coeff(n: int) -> float:
    k = (n - 1) // 2
    return 2 * (-1) ** k * (math.sqrt(2) - 1) ** n / n


def _erf_coeff(n: int) -> float:
    k = (n - 1) // 2
    iv = scipy.special.iv
    return (
        (-1) ** k * 2 / math.sqrt(math.pi) * math.exp(-0.5)
        * (iv(k, 0.5) + iv(k + 1, 0.5)) / n
    )


def _quarter_coeff(n: int) -> float:
    if n % 2:
        return 0.0
    return 2 * math.exp(
        math.lgamma(n / 2 + 0.25) - math.lgamma(n / 2 + 0.75)
    ) / math.sqrt(math.pi)


def _arccos_coeff(n: int) -> float:
    if n == 0:
        return math.pi
    return 0.0 if n % 2 == 0 else -4 / (n * n * math.pi)


def _build_catalog() -> dict[str, CatalogFunction]:
    one_minus_x2 = 1 - _x * _x
    arccos_L = DiffOp([0, -_x, one_minus_x2])
    entries = [
        CatalogFunction(
            "exp", np.exp, DiffOp([-1, 1]),
            known_coeffs=lambda n: 2 * float(scipy.special.iv(n, 1)),
            description="exp(x); f' - f = 0",
        ),
        CatalogFunction(
            "arctan", np.arctan, DiffOp([0, 2 * _x, _x * _x + 1]),
            known_coeffs=_odd(_arctan_coeff), parity="odd",
            description="arctan(x); (x^2+1) f'' + 2x f' = 0",
        ),
        CatalogFunction(
            "erf", scipy.special.erf, DiffOp([0, 2 * _x, 1]),
            known_coeffs=_odd(_erf_coeff), parity="odd",
            description="erf(x); f'' + 2x f' = 0",
        ),
        CatalogFunction(
            "arctanh", np.arctanh, DiffOp([0, 2 * _x, _x * _x - 1]),
            known_coeffs=_odd(lambda n: 2 / n), parity="odd",
            coeff_source="closed_form",
            description="arctanh(x); (x^2-1) f'' + 2x f' = 0",
        ),
        CatalogFunction(
            "arccos", np.arccos, arccos_L,
            known_coeffs=_arccos_coeff,
            verify_operator=DiffOp([one_minus_x2]) * arccos_L,
            nodes=1 << 20, tol=1e-6,
            description="arccos(x); (1-x^2) f'' - x f' = 0, verified through (1-x^2) L",
        ),
        CatalogFunction(
            "inv_quarter", lambda t: (1 - t * t) ** -0.25,
            DiffOp([-_x, 2 * one_minus_x2]),
            known_coeffs=_quarter_coeff, parity="even",
            coeff_source="closed_form",
            description="(1-x^2)^(-1/4); 2(1-x^2) f' - x f = 0",
        ),
    ]
    return {e.name: e for e in entries}


CATALOG = _build_catalog()


def get_function(name: str) -> CatalogFunction:
    try:
        return CATALOG[name]
    except KeyError:
        raise SeriesError(
            f"unknown function {name!r}; choose from {', '.join(CATALOG)}"
        ) from None
