import random

import pytest
from hypothesis import settings

from orecheb.field import RatFunc, RatPoly
from orecheb.ore import RecOp

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

n = RatPoly.x()


def rand_poly(rng: random.Random, d: int, bound: int = 4) -> RatPoly:
    return RatPoly([rng.randint(-bound, bound) for _ in range(d + 1)])


def rand_recop(rng: random.Random, span: int = 2, d: int = 1, lo: int | None = None, rational=False) -> RecOp:
    """Random nonzero recurrence operator with small polynomial (or rational) coefficients."""
    while True:
        cs = []
        for _ in range(span + 1):
            c = RatFunc(rand_poly(rng, d))
            if rational and rng.random() < 0.3:
                c = c / (n + rng.randint(1, 3))
            cs.append(c)
        op = RecOp(cs, rng.randint(-2, 2) if lo is None else lo)
        if not op.is_zero():
            return op


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    import re

    results: dict[int, list[tuple[str, bool]]] = {}
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", rep.nodeid)
            if m:
                results.setdefault(int(m.group(1)), []).append((m.group(2), outcome == "passed"))
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        parts = results[num]
        ok = all(p for _, p in parts)
        failed = [name for name, p in parts if not p]
        detail = f" ({', '.join(failed)} failed)" if failed else ""
        names = ", ".join(name for name, _ in parts)
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  [{names}]{detail}")
