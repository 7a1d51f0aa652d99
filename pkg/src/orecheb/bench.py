"""Random operators and timing/op-count measurements of the algorithms."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .chebrec import Algorithm, RecurrenceResult, run_algorithm
from .field import RatPoly, counting
from .ore import DiffOp


def random_poly(rng: random.Random, d: int, bound: int = 5, exact_degree: bool = False) -> RatPoly:
    cs = [rng.randint(-bound, bound) for _ in range(d + 1)]
    if exact_degree and cs[-1] == 0:
        cs[-1] = rng.choice([-1, 1]) * rng.randint(1, bound)
    return RatPoly(cs)


def random_operator(
    rng: random.Random, k: int, d: int, bound: int = 5, regular_ends: bool = False
) -> DiffOp:
    """Order-k operator with integer polynomial coefficients of degree <= d.

    The leading coefficient has degree exactly d.  With ``regular_ends`` it is
    also nonzero at x = 1 and x = -1.
    """
    while True:
        lead = random_poly(rng, d, bound, exact_degree=True)
        if not regular_ends or (lead(1) != 0 and lead(-1) != 0):
            break
    return DiffOp([random_poly(rng, d, bound) for _ in range(k)] + [lead])


@dataclass
class Measurement:
    algorithm: Algorithm
    k: int
    d: int
    seconds: float
    ops: int
    result: RecurrenceResult


def measure(algo: Algorithm | str, L: DiffOp) -> Measurement:
    algo = Algorithm(algo)
    with counting() as ctr:
        t0 = time.perf_counter()
        res = run_algorithm(algo, L)
        dt = time.perf_counter() - t0
    d = max(c.num.degree for c in L.coeffs)
    return Measurement(algo, L.order, d, dt, ctr.ops, res)


def bench_sizes(kmax: int) -> list[int]:
    ks, k = [], 1
    while k < kmax:
        ks.append(k)
        k *= 2
    ks.append(kmax)
    return ks


def run_bench(
    dmax: int,
    kmax: int,
    seed: int,
    algorithms: list[Algorithm] | None = None,
    lewanowicz_kmax: int = 8,
) -> list[Measurement]:
    """One random operator per k in 1, 2, 4, ..., kmax with degree dmax.

    Lewanowicz is skipped above ``lewanowicz_kmax``: its lclm's grow too
    quickly for a quick table.
    """
    rng = random.Random(seed)
    algorithms = algorithms or list(Algorithm)
    rows = []
    for k in bench_sizes(kmax):
        L = random_operator(rng, k, dmax)
        for algo in algorithms:
            if algo is Algorithm.LEWANOWICZ and k > lewanowicz_kmax:
                continue
            rows.append(measure(algo, L))
    return rows
