import random

import pytest
from hypothesis import settings

from coxcones.polyalg import Poly, PolyRing

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("repo")


def random_poly(ring: PolyRing, rng: random.Random, terms=4, max_exp=2, coeffs=range(-5, 6)) -> Poly:
    out = {}
    for _ in range(terms):
        exp = tuple(rng.randrange(max_exp + 1) for _ in ring.names)
        c = rng.choice([c for c in coeffs if c])
        out[exp] = out.get(exp, 0) + c
    return Poly(ring, out)


@pytest.fixture
def rng():
    return random.Random(1234)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[number] = (ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
