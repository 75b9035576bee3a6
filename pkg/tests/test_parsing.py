import random

import pytest

from degenpoly.parsing import ParseError, parse_poly, recurrence_to_charpoly, render
from degenpoly.polycore import IntPoly

P = IntPoly


@pytest.mark.parametrize("text, coeffs", [
    ("X^4 - 2X^2 - 2", [1, 0, -2, 0, -2]),
    ("coeffs: 3,0,-2", [3, 0, -2]),
    ("2x + x", [3, 0]),
    ("3*x^2 + x - 7", [3, 1, -7]),
    ("-X^2+1", [-1, 0, 1]),
    ("  x  ", [1, 0]),
    ("5", [5]),
    ("X - X", []),
    ("123456789012345678901234567890 X", [123456789012345678901234567890, 0]),
])
def test_parse_examples(text, coeffs):
    assert parse_poly(text) == P(coeffs)


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("X^", 2),
    ("X + + 1", 4),
    ("3 * 4", 4),
    ("X $ 1", 2),
    ("coeffs: 1, a, 3", 11),
])
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(ParseError) as ei:
        parse_poly(text)
    assert ei.value.offset == offset


def test_render_examples():
    assert render(P([1, 0, -2, 0, -2])) == "X^4 - 2X^2 - 2"
    assert render(P([-1, 0, 1])) == "-X^2 + 1"
    assert render(P()) == "0"
    assert str(P([3, -1])) == "3X - 1"


def test_render_roundtrip():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(0, 7)
        f = P([rng.randint(-50, 50) for _ in range(n + 1)])
        assert parse_poly(render(f)) == f


def test_recurrence_examples():
    assert recurrence_to_charpoly([1, 1]) == P([1, -1, -1])
    assert recurrence_to_charpoly([0, 1]) == P([1, 0, -1])
    assert recurrence_to_charpoly([2]) == P([1, -2])
    with pytest.raises(ValueError):
        recurrence_to_charpoly([1, 0])
    with pytest.raises(ValueError):
        recurrence_to_charpoly([])
