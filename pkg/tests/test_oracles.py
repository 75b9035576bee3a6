import math
from fractions import Fraction
from math import isqrt

import mpmath
import numpy as np
import pytest
import sympy

from degenpoly.census import CensusConfig, run_census
from degenpoly.oracles import (
    PiConstant, asymptotic_targets, cubic_linear_family_count, d2_closed, i2_closed, lookup, phi_ratio_sum,
    phi_sieve, r2_closed, r2star_closed, smallest_prime_divisor, sqrt_floor, squarefree_sieve,
)


def test_examples():
    assert (r2_closed(10), i2_closed(10), d2_closed(10)) == (3, 29, 32)
    assert r2star_closed(1) == 2
    assert sqrt_floor(10, 3) == 1 and sqrt_floor(12, 3) == 2 and sqrt_floor(2, 3) == 0
    with pytest.raises(ValueError):
        r2_closed(0)


def test_sqrt_floor_semantics():
    for H in range(1, 400):
        for c in range(1, 12):
            a = sqrt_floor(H, c)
            assert c * a * a <= H < c * (a + 1) ** 2


def _monic_quadratic_brute(H):
    a1 = np.arange(-H, H + 1, dtype=np.int64)[:, None]
    a2 = np.arange(-H, H + 1, dtype=np.int64)[None, :]
    q = a1 * a1
    deg = np.where(a1 == 0, a2 != 0, (q == a2) | (q == 2 * a2) | (q == 3 * a2))
    red = (a1 == 0) & (a2 < 0) & (np.floor(np.sqrt(np.abs(a2)) + 0.5) ** 2 == np.abs(a2))
    return int(deg.sum()), int(red.sum())


@pytest.mark.parametrize("H", [1, 2, 7, 50, 333, 2000])
def test_monic_quadratic_formulas_against_enumeration(H):
    D, R = _monic_quadratic_brute(H)
    assert d2_closed(H) == D and r2_closed(H) == R and i2_closed(H) == D - R


def test_quadratic_formulas_large_h():
    prev = 0
    for H in (10**3, 10**4, 10**5, 10**6):
        d = d2_closed(H)
        assert d == i2_closed(H) + r2_closed(H) and d > prev
        prev = d
    H = 10**6
    second = 2 + math.sqrt(2) + 2 / math.sqrt(3)
    assert abs(d2_closed(H) - 2 * H - second * math.sqrt(H)) <= 6


def _r2star_brute(H):
    count = 0
    for a0 in range(-H, H + 1):
        for a2 in range(-H, H + 1):
            m = -a0 * a2
            if a0 and m > 0 and isqrt(m) ** 2 == m:
                count += 1
    return count


@pytest.mark.parametrize("H", [1, 2, 3, 10, 40, 120])
def test_r2star_against_enumeration(H):
    assert r2star_closed(H) == _r2star_brute(H)


def test_r2star_growth():
    vals = [r2star_closed(H) for H in range(1, 300)]
    assert all(a <= b for a, b in zip(vals, vals[1:]))
    H = 10**6
    assert r2star_closed(H) / (H * math.log(H)) == pytest.approx(12 / math.pi**2, rel=0.05)


def test_cubic_family_below_census():
    for r in run_census(CensusConfig(3, 15, "monic")):
        assert cubic_linear_family_count(r.H) <= r.D
    assert cubic_linear_family_count(1) == 6


def test_sieves_against_sympy():
    N = 3000
    phi = phi_sieve(N)
    sf = squarefree_sieve(N)
    for m in range(1, N + 1):
        assert phi[m] == sympy.totient(m)
        assert sf[m] == all(e == 1 for e in sympy.factorint(m).values())
    assert not sf[0] and phi[0] == 0
    with pytest.raises(ValueError):
        phi_sieve(0)


def test_phi_ratio_sum_two_term_asymptotic():
    z2 = mpmath.zeta(2)
    c = 6 / math.pi**2
    tail = float(mpmath.euler - mpmath.zeta(2, derivative=1) / z2)
    for N in (10**3, 10**4, 10**5):
        assert phi_ratio_sum(N) == pytest.approx(c * (math.log(N) + tail), abs=5.0 / N**0.5)
    assert phi_ratio_sum(1) == 1


def test_constants_and_lookup():
    assert float(lookup("monic", 3, "D").constant) == 4
    assert lookup("general", 3, "D").constant == PiConstant(Fraction(96), -2)
    assert lookup("general", 2, "R").constant == PiConstant(Fraction(12), -2)
    t = lookup("monic", 6, "D")
    assert t.constant is None and t.normalizer(10.0) == pytest.approx(10.0**4)
    t = lookup("monic", 9, "I")
    assert t.normalizer(8.0) == pytest.approx(8.0**3)
    assert lookup("general", 5, "I").normalizer(2.0) == pytest.approx(2.0**2)
    assert str(PiConstant(Fraction(12), -2)) == "12/pi^2"
    with pytest.raises(KeyError):
        lookup("monic", 3, "X")
    assert len(asymptotic_targets()) >= 10


def test_smallest_prime_divisor():
    assert [smallest_prime_divisor(n) for n in (2, 9, 15, 49, 97)] == [2, 3, 3, 7, 97]
    with pytest.raises(ValueError):
        smallest_prime_divisor(1)
