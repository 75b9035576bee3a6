"""Exact univariate polynomials over the integers.

Coefficients are stored in descending order, ``coeffs[0]`` multiplies the
highest power, so ``IntPoly([1, 0, -2])`` is ``X^2 - 2``.  The zero
polynomial is the empty tuple and has no degree (``degree`` returns None).
"""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import Iterable, Sequence


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        object.__setattr__(self, "coeffs", tuple(cs[i:]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def from_ascending(cls, coeffs: Sequence[int]) -> "IntPoly":
        return cls(reversed(list(coeffs)))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "IntPoly":
        return cls([c] + [0] * n)

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls([c])

    @property
    def deg(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lc(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def tail(self) -> int:
        """Constant term f(0)."""
        return self.coeffs[-1] if self.coeffs else 0

    def ascending(self) -> list[int]:
        return list(reversed(self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        from .parsing import render

        return render(self)

    def __neg__(self):
        return negate(self)

    def __add__(self, other):
        return add(self, _lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, negate(_lift(other)))

    def __rsub__(self, other):
        return add(_lift(other), negate(self))

    def __mul__(self, other):
        return mul(self, _lift(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out, base = IntPoly([1]), self
        while e:
            if e & 1:
                out = mul(out, base)
            base = mul(base, base)
            e >>= 1
        return out

    def __call__(self, t: int) -> int:
        return eval_int(self, t)


def _lift(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly([x])
    raise TypeError(f"cannot combine IntPoly with {type(x).__name__}")


X = IntPoly([1, 0])
ZERO = IntPoly()
ONE = IntPoly([1])


def degree(f: IntPoly) -> int | None:
    return f.deg


def height(f: IntPoly) -> int:
    return max((abs(c) for c in f.coeffs), default=0)


def add(f: IntPoly, g: IntPoly) -> IntPoly:
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    shift = len(a) - len(b)
    out = list(a)
    for i, c in enumerate(b):
        out[shift + i] += c
    return IntPoly(out)


def negate(f: IntPoly) -> IntPoly:
    return IntPoly([-c for c in f.coeffs])


def mul(f: IntPoly, g: IntPoly) -> IntPoly:
    a, b = f.coeffs, g.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return IntPoly(out)


def scale(f: IntPoly, c: int) -> IntPoly:
    return IntPoly([c * x for x in f.coeffs])


def derivative(f: IntPoly) -> IntPoly:
    n = len(f.coeffs) - 1
    return IntPoly([c * (n - i) for i, c in enumerate(f.coeffs[:-1])])


def eval_int(f: IntPoly, t: int) -> int:
    acc = 0
    for c in f.coeffs:
        acc = acc * t + c
    return acc


def compose_scale(f: IntPoly, c: int) -> IntPoly:
    """f(cX)."""
    n = len(f.coeffs) - 1
    return IntPoly([a * c ** (n - i) for i, a in enumerate(f.coeffs)])


def reverse(f: IntPoly) -> IntPoly:
    """X^deg f * f(1/X); requires f(0) != 0 to keep the degree."""
    return IntPoly(reversed(f.coeffs))


def content(f: IntPoly) -> int:
    if not f:
        raise ValueError("content of the zero polynomial")
    return reduce(gcd, f.coeffs, 0)


def primitive_part(f: IntPoly) -> IntPoly:
    c = content(f)
    if f.lc < 0:
        c = -c
    return IntPoly([a // c for a in f.coeffs])


def divmod_poly(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division with remainder when lc(g) divides every step; raises otherwise.

    Always succeeds for monic g.
    """
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lc = g.coeffs[0]
    if len(rem) - 1 < dg:
        return ZERO, f
    quot = []
    for i in range(len(rem) - dg):
        c = rem[i]
        if c % lc:
            raise ArithmeticError("inexact division over the integers")
        q = c // lc
        quot.append(q)
        if q:
            for j in range(1, dg + 1):
                rem[i + j] -= q * g.coeffs[j]
        rem[i] = 0
    return IntPoly(quot), IntPoly(rem[len(rem) - dg:] if dg else [])


def div_exact(f: IntPoly, g: IntPoly) -> IntPoly:
    q, r = divmod_poly(f, g)
    if r:
        raise ArithmeticError(f"{g!r} does not divide {f!r}")
    return q


def rem_monic(f: IntPoly, g: IntPoly) -> IntPoly:
    if abs(g.lc) != 1:
        raise ValueError("divisor must be monic up to sign")
    return divmod_poly(f, g)[1]


def pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """lc(g)^(deg f - deg g + 1) * f  mod  g, computed in Z[X]."""
    df, dg = f.deg, g.deg
    if dg is None:
        raise ZeroDivisionError("pseudo-remainder by zero")
    if df is None or df < dg:
        return f
    rem = list(f.coeffs)
    lc = g.coeffs[0]
    gc = g.coeffs
    for i in range(df - dg + 1):
        c = rem[i]
        rem = [lc * x for x in rem]
        if c:
            for j in range(dg + 1):
                rem[i + j] -= c * gc[j]
    return IntPoly(rem[df - dg + 1:])


def gcd_z(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd in Z[X] with positive leading coefficient (primitive PRS)."""
    if not f and not g:
        raise ValueError("gcd of two zero polynomials")
    if not f:
        return primitive_part(g)
    if not g:
        return primitive_part(f)
    a, b = primitive_part(f), primitive_part(g)
    if a.deg < b.deg:
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, (primitive_part(r) if r else r)
    return primitive_part(a)


def squarefree_part(f: IntPoly) -> IntPoly:
    if not f:
        raise ValueError("squarefree part of the zero polynomial")
    return primitive_part(div_exact(f, gcd_z(f, derivative(f))))


def strip_zero_roots(f: IntPoly) -> tuple[int, IntPoly]:
    if not f:
        raise ValueError("zero polynomial has no finite zero-root multiplicity")
    cs = f.coeffs
    v = 0
    while cs[len(cs) - 1 - v] == 0:
        v += 1
    return v, IntPoly(cs[: len(cs) - v])


def compose_power(g: IntPoly, ell: int) -> IntPoly:
    """g(X^ell)."""
    if not g:
        raise ValueError("compose_power of the zero polynomial")
    if ell < 1:
        raise ValueError("exponent must be >= 1")
    out = []
    for c in g.coeffs[:-1]:
        out.append(c)
        out.extend([0] * (ell - 1))
    out.append(g.coeffs[-1])
    return IntPoly(out)


def decompose_power(f: IntPoly) -> tuple[int, IntPoly]:
    """Largest m with f = g(X^m), together with g."""
    if not f or f.deg == 0:
        raise ValueError("decompose_power needs a nonconstant polynomial")
    n = f.deg
    m = 0
    for i, c in enumerate(f.coeffs):
        if c:
            m = gcd(m, n - i)
    return m, IntPoly(f.coeffs[::m])
