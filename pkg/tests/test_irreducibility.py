import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from degenpoly.irreducibility import (
    UnsupportedDegreeError, eisenstein_check, is_irreducible_q, positive_divisors, rational_roots,
)
from degenpoly.polycore import IntPoly as P, mul, scale
from strategies import polys

x = sympy.symbols("x")


def _sympy_irreducible(f):
    _, factors = sympy.factor_list(sympy.Poly(f.coeffs, x))
    return len(factors) == 1 and factors[0][1] == 1 and factors[0][0].degree() == f.deg


def test_examples():
    assert is_irreducible_q(P([1, 0, -2]))
    assert not is_irreducible_q(P([1, 0, -4]))
    assert is_irreducible_q(P([1, 0, -2, 0, -2]))
    assert not is_irreducible_q(P([1, 0, 0, 0, 4]))  # Sophie Germain
    assert not is_irreducible_q(P([1, 0, 1, 0, 1]))
    assert is_irreducible_q(P([1, 0, 0, 0, 1]))
    assert is_irreducible_q(P([2, 3]))
    assert not is_irreducible_q(P([1, 0]) * P([1, 1]))


def test_refusals():
    with pytest.raises(UnsupportedDegreeError):
        is_irreducible_q(P([1, 0, 0, 0, 0, 1]))
    with pytest.raises(ValueError):
        is_irreducible_q(P([5]))
    with pytest.raises(ValueError):
        positive_divisors(0)


def test_divisors_and_rational_roots():
    assert positive_divisors(12) == [1, 2, 3, 4, 6, 12]
    assert positive_divisors(-7) == [1, 7]
    assert rational_roots(P([2, -3])) == [Fraction(3, 2)]
    assert rational_roots(P([6, -5, 1])) == [Fraction(1, 3), Fraction(1, 2)]
    assert rational_roots(P([1, 0, 1])) == []
    assert rational_roots(P([1, 0, 0])) == [Fraction(0)]


def test_against_sympy_random():
    rng = random.Random(31)
    for _ in range(1500):
        n = rng.randint(1, 4)
        f = P([rng.randint(1, 12)] + [rng.randint(-12, 12) for _ in range(n)])
        assert is_irreducible_q(f) == _sympy_irreducible(f), f


def test_products_of_rational_quadratics_detected():
    # cleared-denominator products of two quadratics, height <= 30
    rng = random.Random(37)
    seen = 0
    while seen < 1000:
        q1 = P([rng.randint(1, 5), rng.randint(-5, 5), rng.choice([-5, -3, -2, -1, 1, 2, 3, 5])])
        q2 = P([rng.randint(1, 5), rng.randint(-5, 5), rng.choice([-5, -3, -2, -1, 1, 2, 3, 5])])
        f = mul(q1, q2)
        if max(abs(c) for c in f.coeffs) > 30:
            continue
        seen += 1
        assert not is_irreducible_q(f), f


@given(polys(1, 4, h=10), st.sampled_from([-3, -1, 2, 5]))
def test_scaling_invariance(f, c):
    assert is_irreducible_q(scale(f, c)) == is_irreducible_q(f)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=4), st.sampled_from([2, 3, 5]))
def test_eisenstein_implies_irreducible(tail, p):
    f = P([1] + [p * t for t in tail[:-1]] + [p * (p * tail[-1] + 1)])
    assert eisenstein_check(f, p)
    assert is_irreducible_q(f)


def test_eisenstein_check():
    assert eisenstein_check(P([1, 0, -2]), 2)
    assert not eisenstein_check(P([1, 0, -4]), 2)
    assert not eisenstein_check(P([2, 0, -2]), 2)
