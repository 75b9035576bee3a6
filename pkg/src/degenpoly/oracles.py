"""Closed-form counts, sieves and the table of asymptotic targets.

Floors of square roots of quotients are taken as isqrt(H // c): the number of
integers a >= 1 with c a^2 <= H.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


def _check_h(H: int):
    if not isinstance(H, int) or H < 1:
        raise ValueError("H must be an integer >= 1")


def sqrt_floor(H: int, c: int = 1) -> int:
    """Largest a >= 0 with c a^2 <= H."""
    return isqrt(H // c)


def r2_closed(H: int) -> int:
    _check_h(H)
    return isqrt(H)


def i2_closed(H: int) -> int:
    _check_h(H)
    return 2 * H + isqrt(H) + 2 * sqrt_floor(H, 2) + 2 * sqrt_floor(H, 3)


def d2_closed(H: int) -> int:
    return i2_closed(H) + r2_closed(H)


def squarefree_sieve(N: int) -> list[bool]:
    """flags[m] is True iff m is squarefree, for 0 <= m <= N (flags[0] False)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    flags = [True] * (N + 1)
    flags[0] = False
    q = 2
    while q * q <= N:
        for m in range(q * q, N + 1, q * q):
            flags[m] = False
        q += 1
    return flags


def phi_sieve(N: int) -> list[int]:
    """phi[m] for 0 <= m <= N (phi[0] = 0)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    phi = list(range(N + 1))
    for p in range(2, N + 1):
        if phi[p] == p:
            for m in range(p, N + 1, p):
                phi[m] -= phi[m] // p
    return phi


def phi_ratio_sum(N: int) -> float:
    """sum_{j <= N} phi(j) / j^2."""
    phi = phi_sieve(N)
    return math.fsum(phi[j] / (j * j) for j in range(1, N + 1))


def r2star_closed(H: int) -> int:
    _check_h(H)
    sf = squarefree_sieve(H)
    return 2 * sum(sqrt_floor(H, c) ** 2 for c in range(1, H + 1) if sf[c])


def cubic_linear_family_count(H: int) -> int:
    """Monic cubics (X + a)(X^2 + b), b != 0, of height <= H."""
    _check_h(H)
    return 2 * sum(2 * (H // b) + 1 for b in range(1, H + 1))


@dataclass(frozen=True)
class PiConstant:
    """coeff * pi^pi_exp, kept exact until it is compared with data."""

    coeff: Fraction
    pi_exp: int = 0

    def __float__(self) -> float:
        return float(self.coeff) * math.pi**self.pi_exp

    def __str__(self) -> str:
        c = self.coeff
        if self.pi_exp == 0:
            return str(c)
        num = "" if c.numerator == 1 and self.pi_exp < 0 else str(c.numerator)
        if self.pi_exp < 0:
            den = f"pi^{-self.pi_exp}" if c.denominator == 1 else f"({c.denominator} pi^{-self.pi_exp})"
            return f"{num or '1'}/{den}"
        return f"{c} pi^{self.pi_exp}"


@dataclass(frozen=True)
class Normalizer:
    """H^power * (log H)^log_power."""

    power: Fraction
    log_power: int = 0

    def __call__(self, H: float) -> float:
        return float(H) ** float(self.power) * math.log(H) ** self.log_power

    def __str__(self) -> str:
        p = self.power
        if p == 1:
            base = "H"
        elif p.denominator == 1:
            base = f"H^{p.numerator}"
        else:
            base = f"H^({p})"
        return base + (" log H" if self.log_power == 1 else "")


@dataclass(frozen=True)
class AsymptoticTarget:
    variant: str
    n: int | None          # None: the row is a template for n >= n_min
    quantity: str          # D, I or R
    normalizer: str        # symbolic name, e.g. "H^{n-2}"
    constant: PiConstant | None  # None: unknown
    n_min: int = 2
    source: str = ""

    @property
    def constant_value(self) -> float | None:
        return None if self.constant is None else float(self.constant)

    def for_degree(self, n: int) -> "ResolvedTarget":
        return ResolvedTarget(self.variant, n, self.quantity, _normalizer(self.normalizer, n), self.constant)


@dataclass(frozen=True)
class ResolvedTarget:
    variant: str
    n: int
    quantity: str
    normalizer: Normalizer
    constant: PiConstant | None


def smallest_prime_divisor(n: int) -> int:
    if n < 2:
        raise ValueError("n must be >= 2")
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def _normalizer(name: str, n: int) -> Normalizer:
    p = smallest_prime_divisor(n)
    table = {
        "H": Normalizer(Fraction(1)),
        "H^(1/2)": Normalizer(Fraction(1, 2)),
        "H log H": Normalizer(Fraction(1), 1),
        "H^2": Normalizer(Fraction(2)),
        "H^2 log H": Normalizer(Fraction(2), 1),
        "H^{n-2}": Normalizer(Fraction(n - 2)),
        "H^{n-1}": Normalizer(Fraction(n - 1)),
        "H^{n/p}": Normalizer(Fraction(n, p)),
        "H^{1+n/p}": Normalizer(1 + Fraction(n, p)),
    }
    return table[name]


_FOUR = PiConstant(Fraction(4))
_TARGETS = (
    AsymptoticTarget("monic", 2, "D", "H", PiConstant(Fraction(2)), source="exact formula for D_2"),
    AsymptoticTarget("monic", 2, "R", "H^(1/2)", PiConstant(Fraction(1)), source="R_2 = isqrt(H)"),
    AsymptoticTarget("monic", 3, "D", "H log H", _FOUR, source="limit of D_3/(H log H)"),
    AsymptoticTarget("monic", 3, "R", "H log H", _FOUR, source="limit of R_3/(H log H)"),
    AsymptoticTarget("monic", None, "D", "H^{n-2}", None, n_min=4, source="order of D_n, n >= 4"),
    AsymptoticTarget("monic", None, "R", "H^{n-2}", None, n_min=4, source="order of R_n, n >= 4"),
    AsymptoticTarget("monic", None, "I", "H^{n/p}", None, n_min=3, source="order of I_n, p least prime of n"),
    AsymptoticTarget("general", 2, "I", "H^2", _FOUR, source="limit of I_2*/H^2"),
    AsymptoticTarget("general", 2, "R", "H log H", PiConstant(Fraction(12), -2),
                     source="limit of R_2*/(H log H) = 2/zeta(2); also H log H << R_2* << H log H"),
    AsymptoticTarget("general", 2, "D", "H^2", _FOUR, source="limit of D_2*/H^2"),
    AsymptoticTarget("general", 3, "D", "H^2 log H", PiConstant(Fraction(96), -2), source="limit of D_3*/(H^2 log H)"),
    AsymptoticTarget("general", 3, "R", "H^2 log H", PiConstant(Fraction(96), -2), source="limit of R_3*/(H^2 log H)"),
    AsymptoticTarget("general", None, "D", "H^{n-1}", None, n_min=4, source="order of D_n*, n >= 4"),
    AsymptoticTarget("general", None, "R", "H^{n-1}", None, n_min=4, source="order of R_n*, n >= 4"),
    AsymptoticTarget("general", None, "I", "H^{1+n/p}", None, n_min=3, source="order of I_n*, p least prime of n"),
)


def asymptotic_targets() -> list[AsymptoticTarget]:
    return list(_TARGETS)


def lookup(variant: str, n: int, quantity: str) -> ResolvedTarget:
    """The target row for a concrete (variant, n, quantity)."""
    for t in _TARGETS:
        if t.variant == variant and t.quantity == quantity and t.n == n:
            return t.for_degree(n)
    for t in _TARGETS:
        if t.variant == variant and t.quantity == quantity and t.n is None and n >= t.n_min:
            return t.for_degree(n)
    raise KeyError(f"no asymptotic target for {(variant, n, quantity)}")
