import random

import pytest
from hypothesis import settings

from degenpoly.polycore import IntPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def rand_poly(rng: random.Random, deg: int, h: int, monic: bool = False) -> IntPoly:
    c = [rng.randint(-h, h) for _ in range(deg + 1)]
    if monic:
        c[0] = 1
    while c[0] == 0:
        c[0] = rng.randint(-h, h)
    return IntPoly(c)


@pytest.fixture
def rng():
    return random.Random(12345)


_ACCEPTANCE: list = []


@pytest.fixture
def acceptance_lines():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
