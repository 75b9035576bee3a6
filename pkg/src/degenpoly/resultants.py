"""Resultants, the ratio resultant, rotation products and cyclotomic polynomials.

The ratio resultant of f is ``r(X) = Res_Y(f(Y), f(XY))``.  Its roots are all
quotients alpha_i / alpha_j of pairs of roots of f, so f has two roots whose
quotient is a primitive k-th root of unity exactly when Phi_k divides r.

Which k can occur at all is bounded by the degree of a root-of-unity quotient
of two roots of a degree-n polynomial.

* ``safe`` mode: both roots have degree <= n, so their quotient lives in a
  field of degree <= n^2, hence phi(k) <= n^2.
* ``tight`` mode: phi(k) <= max(n, floor(n/2) * ceil(n/2)).  Two roots of the
  same irreducible factor of degree d are conjugate, and a root-of-unity
  quotient of conjugates has degree <= d <= n (Dubickas-Drungilas).  Roots of
  two different factors of degrees d1 + d2 <= n give a quotient in a field of
  degree <= d1*d2 <= floor(n/2)*ceil(n/2).

Neither bound is claimed to be sharp.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd

from .polycore import (
    ONE,
    IntPoly,
    compose_scale,
    div_exact,
    mul,
    rem_monic,
)

__all__ = [
    "resultant",
    "sylvester_det",
    "ratio_resultant",
    "rotation_product",
    "power_root_poly",
    "cyclotomic_poly",
    "euler_phi",
    "candidate_orders",
    "cyclotomic_multiplicity",
    "interpolate",
    "ORDER_MODES",
]

ORDER_MODES = ("safe", "tight")


def _content(cs):
    g = 0
    for c in cs:
        g = gcd(g, c)
    return g


def _prem(a: list[int], b: list[int]) -> list[int]:
    # descending coefficient lists, len(a) >= len(b) >= 2
    rem = list(a)
    lc = b[0]
    db = len(b) - 1
    for i in range(len(a) - len(b) + 1):
        c = rem[i]
        rem = [lc * x for x in rem]
        if c:
            for j in range(db + 1):
                rem[i + j] -= c * b[j]
    out = rem[len(a) - db:]
    k = 0
    while k < len(out) and out[k] == 0:
        k += 1
    return out[k:]


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g), the Sylvester determinant, by the subresultant algorithm."""
    if not f or not g:
        raise ValueError("resultant with the zero polynomial")
    A, B = list(f.coeffs), list(g.coeffs)
    da, db = len(A) - 1, len(B) - 1
    if da == 0:
        return A[0] ** db
    if db == 0:
        return B[0] ** da
    a, b = _content(A), _content(B)
    A = [x // a for x in A]
    B = [x // b for x in B]
    t = a**db * b**da
    s = 1
    if da < db:
        A, B = B, A
        da, db = db, da
        if da * db % 2:
            s = -1
    g_, h = 1, 1
    while True:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = _prem(A, B)
        if not R:
            return 0
        A = B
        div = g_ * h**delta
        B = [x // div for x in R]
        g_ = A[0]
        h = g_**delta // h ** (delta - 1) if delta else h
        da, db = len(A) - 1, len(B) - 1
        if db == 0:
            h = B[0] ** da // h ** (da - 1)
            return s * t * h


def sylvester_det(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) as the Sylvester determinant, by Bareiss elimination."""
    if not f or not g:
        raise ValueError("resultant with the zero polynomial")
    m, n = f.deg, g.deg
    size = m + n
    if size == 0:
        return 1
    rows = []
    for i in range(n):
        rows.append([0] * i + list(f.coeffs) + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(g.coeffs) + [0] * (m - 1 - i))
    return _bareiss(rows)


def _bareiss(M: list[list[int]]) -> int:
    M = [row[:] for row in M]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pk - M[i][k] * M[k][j]) // prev
        prev = pk
    return sign * M[n - 1][n - 1]


def interpolate(xs: list[int], ys: list[int]) -> IntPoly:
    """Exact interpolation over Q; every coefficient must come out integral."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    # Newton form to ascending monomial coefficients
    coeffs = [Fraction(0)] * n
    coeffs[0] = dd[n - 1]
    deg = 0
    for i in range(n - 2, -1, -1):
        # coeffs <- coeffs * (X - xs[i]) + dd[i]
        deg += 1
        for j in range(deg, 0, -1):
            coeffs[j] = coeffs[j - 1] - xs[i] * coeffs[j]
        coeffs[0] = -xs[i] * coeffs[0] + dd[i]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolated coefficient is not an integer")
        out.append(c.numerator)
    return IntPoly.from_ascending(out)


def _nonzero_points(count: int) -> list[int]:
    pts = []
    i = 1
    while len(pts) < count:
        pts.append(i)
        if len(pts) < count:
            pts.append(-i)
        i += 1
    return pts


def ratio_resultant(f: IntPoly) -> IntPoly:
    """Res_Y(f(Y), f(XY)), of degree exactly (deg f)^2."""
    n = f.deg
    if n is None or n < 1:
        raise ValueError("ratio resultant needs a nonconstant polynomial")
    if f.tail == 0:
        raise ValueError("ratio resultant vanishes identically when f(0) = 0")
    xs = _nonzero_points(n * n + 1)
    ys = [resultant(f, compose_scale(f, x)) for x in xs]
    r = interpolate(xs, ys)
    if r.deg != n * n:
        raise ArithmeticError(f"ratio resultant has degree {r.deg}, expected {n * n}")
    return r


def _newton_power_sums(f: IntPoly, count: int) -> list[Fraction]:
    # p_1..p_count of the roots of f
    a = [Fraction(c, f.lc) for c in f.coeffs]
    n = f.deg
    p = [Fraction(0)] * (count + 1)
    for m in range(1, count + 1):
        s = -m * a[m] if m <= n else Fraction(0)
        for i in range(1, min(m, n + 1)):
            s -= a[i] * p[m - i]
        p[m] = s
    return p


def _from_power_sums(ps: list[Fraction], n: int) -> list[Fraction]:
    # monic degree-n coefficients (descending, e[0] = 1) from p_1..p_n
    e = [Fraction(1)] + [Fraction(0)] * n
    for m in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, m + 1):
            s += e[m - i] * ps[i]
        e[m] = -s / m
    return e


def power_root_poly(f: IntPoly, d: int) -> IntPoly:
    """prod over d-th roots of unity zeta of f(zeta X); a polynomial in X^d."""
    n = f.deg
    if n is None:
        raise ValueError("zero polynomial")
    if d == 1 or n == 0:
        return f if d == 1 else IntPoly([f.lc**d])
    ps = _newton_power_sums(f, n * d)
    e = _from_power_sums([Fraction(0)] + [ps[j * d] for j in range(1, n + 1)], n)
    sign = -1 if (n * (d - 1)) % 2 else 1
    lead = f.lc**d
    out = []
    for c in e:
        v = sign * lead * c
        if v.denominator != 1:
            raise ArithmeticError("non-integral power-root polynomial")
        out.append(int(v))
        out.extend([0] * (d - 1))
    return IntPoly(out[: len(out) - (d - 1)])


def _mobius(n: int) -> int:
    res, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rotation_product(f: IntPoly, k: int) -> IntPoly:
    """prod over primitive k-th roots of unity eta of f(eta X), in Z[X].

    Equal to Res_Y(Phi_k(Y), f(XY)); computed from the full products over
    d-th roots of unity by Moebius inversion over d | k.
    """
    if k < 2:
        raise ValueError("rotation order must be >= 2")
    if not f:
        raise ValueError("zero polynomial")
    num, den = ONE, ONE
    for d in _divisors(k):
        mu = _mobius(k // d)
        if mu == 1:
            num = mul(num, power_root_poly(f, d))
        elif mu == -1:
            den = mul(den, power_root_poly(f, d))
    return div_exact(num, den)


_cyclo_lock = threading.Lock()
_cyclo: dict[int, IntPoly] = {}
_phi: dict[int, int] = {}


def euler_phi(k: int) -> int:
    if k < 1:
        raise ValueError("euler_phi needs k >= 1")
    v = _phi.get(k)
    if v is not None:
        return v
    res, m, p = k, k, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            res -= res // p
        p += 1
    if m > 1:
        res -= res // m
    _phi[k] = res
    return res


def cyclotomic_poly(k: int) -> IntPoly:
    if k < 1:
        raise ValueError("cyclotomic order must be >= 1")
    phi_k = _cyclo.get(k)
    if phi_k is None:
        with _cyclo_lock:
            phi_k = _cyclo.get(k) or _build_locked(k)
    return phi_k


def _build_locked(k: int) -> IntPoly:
    # caller holds _cyclo_lock
    poly = IntPoly([1] + [0] * (k - 1) + [-1])
    for d in _divisors(k)[:-1]:
        poly = div_exact(poly, _cyclo.get(d) or _build_locked(d))
    _cyclo[k] = poly
    return poly


def order_bound(n: int, mode: str = "safe") -> int:
    if mode == "safe":
        return n * n
    if mode == "tight":
        return max(n, (n // 2) * ((n + 1) // 2))
    raise ValueError(f"unknown order mode {mode!r}")


_orders_cache: dict[tuple[int, str], tuple[int, ...]] = {}


def candidate_orders(n: int, mode: str = "safe") -> tuple[int, ...]:
    """All k >= 2 with phi(k) <= B(n); phi(k) >= sqrt(k/2) caps the scan."""
    if n < 2:
        raise ValueError("candidate orders need n >= 2")
    key = (n, mode)
    got = _orders_cache.get(key)
    if got is None:
        bound = order_bound(n, mode)
        got = tuple(k for k in range(2, 2 * bound * bound + 3) if euler_phi(k) <= bound)
        _orders_cache[key] = got
    return got


def cyclotomic_multiplicity(r: IntPoly, k: int) -> int:
    """Largest e with Phi_k^e dividing r (r nonzero)."""
    phi_k = cyclotomic_poly(k)
    e = 0
    while r.deg is not None and r.deg >= phi_k.deg:
        try:
            q = div_exact(r, phi_k)
        except ArithmeticError:
            break
        r = q
        e += 1
    return e


def divides_cyclotomic(r: IntPoly, k: int) -> bool:
    return not rem_monic(r, cyclotomic_poly(k))
