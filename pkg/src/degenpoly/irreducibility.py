"""Irreducibility over Q for degrees 1 to 4.

A polynomial counts as irreducible when it is irreducible in Q[X], so the
content is ignored: 2X^2 + 2 is irreducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .polycore import IntPoly, primitive_part, strip_zero_roots

MAX_DEGREE = 4


class UnsupportedDegreeError(ValueError):
    pass


def positive_divisors(m: int) -> list[int]:
    m = abs(m)
    if m == 0:
        raise ValueError("divisors of zero")
    small, large = [], []
    i = 1
    while i * i <= m:
        if m % i == 0:
            small.append(i)
            if i * i != m:
                large.append(m // i)
        i += 1
    return small + large[::-1]


def _is_root(coeffs, p: int, q: int) -> bool:
    # q^n f(p/q) == 0, all in integers
    n = len(coeffs) - 1
    acc = 0
    for i, a in enumerate(coeffs):
        acc += a * p ** (n - i) * q**i
    return acc == 0


def rational_roots(f: IntPoly) -> list[Fraction]:
    """Distinct rational roots of f, sorted."""
    if not f:
        raise ValueError("rational roots of the zero polynomial")
    v, g = strip_zero_roots(f)
    out = {Fraction(0)} if v else set()
    if g.deg and g.deg > 0:
        cs = g.coeffs
        for q in positive_divisors(cs[0]):
            for p in positive_divisors(cs[-1]):
                if gcd(p, q) != 1:
                    continue
                for sp in (p, -p):
                    if _is_root(cs, sp, q):
                        out.add(Fraction(sp, q))
    return sorted(out)


def _is_square(m: int) -> bool:
    return m >= 0 and isqrt(m) ** 2 == m


def _has_quadratic_split(a: int, b: int, c: int, d: int, e: int) -> bool:
    # (c0 X^2 + c1 X + c2)(d0 X^2 + d1 X + d2) = a X^4 + b X^3 + c X^2 + d X + e
    for c0 in positive_divisors(a):
        d0 = a // c0
        for c2abs in positive_divisors(e):
            for c2 in (c2abs, -c2abs):
                d2 = e // c2
                det = d0 * c2 - c0 * d2
                if det:
                    n1 = b * c2 - c0 * d
                    n2 = d0 * d - d2 * b
                    if n1 % det or n2 % det:
                        continue
                    c1, d1 = n1 // det, n2 // det
                    if c1 * d1 + c0 * d2 + c2 * d0 == c:
                        return True
                    continue
                # dependent equations: c0 d1^2 - b d1 + K d0 = 0 with c1 d1 = K
                k = c - c0 * d2 - c2 * d0
                disc = b * b - 4 * c0 * k * d0
                if not _is_square(disc):
                    continue
                s = isqrt(disc)
                for num in (b + s, b - s):
                    if num % (2 * c0):
                        continue
                    d1 = num // (2 * c0)
                    rest = b - c0 * d1
                    if rest % d0:
                        continue
                    c1 = rest // d0
                    if c1 * d1 == k and c1 * d2 + c2 * d1 == d:
                        return True
    return False


def is_irreducible_q(f: IntPoly) -> bool:
    n = f.deg
    if n is None or n < 1 or n > MAX_DEGREE:
        raise UnsupportedDegreeError(f"irreducibility supported for degrees 1..{MAX_DEGREE}, got {n}")
    if n == 1:
        return True
    g = primitive_part(f)
    if g.tail == 0:
        return False
    if n == 2:
        a, b, c = g.coeffs
        return not _is_square(b * b - 4 * a * c)
    if rational_roots(g):
        return False
    if n == 3:
        return True
    return not _has_quadratic_split(*g.coeffs)


def eisenstein_check(f: IntPoly, p: int) -> bool:
    if not f or f.deg < 1:
        return False
    cs = f.coeffs
    if cs[0] % p == 0:
        return False
    if any(c % p for c in cs[1:]):
        return False
    return cs[-1] % (p * p) != 0
