"""Numeric root location, Mahler measure and Cauchy's root radius."""

from __future__ import annotations

import math

import numpy as np

from ._numeric import MAX_ITER, TOL, certified_roots
from .polycore import IntPoly, height


def _float_coeffs(f: IntPoly) -> np.ndarray:
    try:
        c = np.array([float(a) for a in f.coeffs], dtype=np.float64)
    except OverflowError:
        raise ValueError("coefficients too large for floating point") from None
    if not np.all(np.isfinite(c)):
        raise ValueError("coefficients too large for floating point")
    return c


def _components(roots, radii):
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) <= radii[i] + radii[j]:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def roots_numeric(f: IntPoly, tol: float = TOL, max_iter: int = MAX_ITER):
    """All roots of f as (approximation, radius) pairs.

    When the inclusion discs are disjoint each one holds exactly one root.
    Discs that overlap are widened to cover their whole cluster, so every
    returned disc still contains a root but several may share one cluster.
    """
    if not f:
        raise ValueError("roots of the zero polynomial")
    if f.deg == 0:
        return []
    roots, radii, isolated = certified_roots(_float_coeffs(f), tol, max_iter)
    radii = radii.copy()
    if not isolated:
        for comp in _components(roots, radii):
            if len(comp) == 1:
                continue
            for i in comp:
                radii[i] = max(abs(roots[i] - roots[j]) + radii[j] for j in comp)
    return [(complex(z), float(r)) for z, r in zip(roots, radii)]


def mahler_bounds(f: IntPoly) -> tuple[float, float]:
    """Certified-ish enclosure [lo, hi] of M(f) from the root discs."""
    if not f:
        raise ValueError("Mahler measure of the zero polynomial")
    lo = hi = float(abs(f.lc))
    for z, r in roots_numeric(f):
        a = abs(z)
        lo *= max(1.0, a - r)
        hi *= max(1.0, a + r)
    return lo, hi


def mahler_measure(f: IntPoly) -> float:
    """|a_0| * prod max(1, |alpha|) over the roots."""
    if not f:
        raise ValueError("Mahler measure of the zero polynomial")
    m = float(abs(f.lc))
    for z, _ in roots_numeric(f):
        m *= max(1.0, abs(z))
    return m


def cauchy_radius(f: IntPoly) -> float:
    """Unique positive root of |a_0| x^n - |a_1| x^(n-1) - ... - |a_n|."""
    if not f or f.deg == 0:
        raise ValueError("Cauchy radius needs a nonconstant polynomial")
    if all(c == 0 for c in f.coeffs[1:]):
        raise ValueError("Cauchy radius needs (a_1, ..., a_n) != 0")
    c = [abs(float(a)) for a in f.coeffs]
    c = [c[0]] + [-x for x in c[1:]]

    def g(x):
        acc = 0.0
        for a in c:
            acc = acc * x + a
        return acc

    def dg(x):
        n = len(c) - 1
        acc = 0.0
        for i, a in enumerate(c[:-1]):
            acc = acc * x + a * (n - i)
        return acc

    lo, hi = 0.0, 1.0 + max(-x for x in c[1:]) / c[0]
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g(mid) > 0.0:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-13 * hi:
            break
    x = hi
    for _ in range(3):
        d = dg(x)
        if d <= 0.0:
            break
        step = g(x) / d
        nx = x - step
        if not lo * (1 - 1e-12) <= nx <= hi * (1 + 1e-12):
            break
        x = nx
    return x


def has_dominant_root(f: IntPoly):
    """True if one root is strictly largest in modulus, False if certainly
    not, None when the root discs cannot decide."""
    if not f or f.deg == 0:
        raise ValueError("dominant root needs a nonconstant polynomial")
    if f.deg == 1:
        return True
    try:
        roots, radii, isolated = certified_roots(_float_coeffs(f))
    except ValueError:
        return None
    if not isolated:
        return None
    order = sorted(range(len(roots)), key=lambda i: -abs(roots[i]))
    top = order[0]
    lo_top = abs(roots[top]) - radii[top]
    rest = order[1:]
    if all(abs(roots[i]) + radii[i] < lo_top for i in rest):
        return True
    z, r = roots[top], radii[top]
    if abs(z.imag) > r:
        # the conjugate of a non-real root is another root of equal modulus
        partner = [i for i in rest if abs(roots[i] - z.conjugate()) <= radii[i] + r]
        others = [i for i in rest if i not in partner]
        if len(partner) == 1 and all(abs(roots[i]) + radii[i] < lo_top for i in others):
            return False
    return None


def mahler_bounds_check(f: IntPoly, rel_tol: float = 1e-9) -> bool:
    """H(f) 2^-n <= M(f) <= H(f) sqrt(n+1), up to the numeric enclosure."""
    if not f:
        return False
    n = f.deg
    h = float(height(f))
    lo, hi = mahler_bounds(f)
    return h * 2.0**-n <= hi * (1 + rel_tol) and lo <= h * math.sqrt(n + 1) * (1 + rel_tol)
