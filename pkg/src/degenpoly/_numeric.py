"""Compiled root finding with certified inclusion radii.

Roots come from Aberth-Ehrlich iteration.  Radii use Smith's bound: for
distinct approximations z_1..z_n of the roots of p (leading coefficient a_0),
the discs |z - z_i| <= n |p(z_i)| / |a_0 prod_{j != i} (z_i - z_j)| cover
every root, and a connected union of m discs holds exactly m roots.  The
residual |p(z_i)| is inflated by a forward error bound for Horner evaluation
(plus coefficient rounding) so the radii stay valid in floating point.
"""

import math

import numpy as np
from numba import njit

TOL = 1e-14
MAX_ITER = 500
_U = 2.0**-53


@njit(cache=True, nogil=True)
def aberth(c, n, roots, tol=TOL, max_iter=MAX_ITER):
    """Roots of sum c[i] z^(n-i) into roots[:n]; returns the iteration count."""
    a0 = c[0]
    an = abs(c[n])
    if an > 0.0:
        rad = (an / abs(a0)) ** (1.0 / n)
    else:
        rad = 1.0
    # spread the start radius slightly so symmetric inputs do not stall
    for i in range(n):
        ang = 2.0 * math.pi * i / n + 0.7
        roots[i] = rad * (1.0 + 0.1 * i / n) * complex(math.cos(ang), math.sin(ang))
    it = 0
    while it < max_iter:
        it += 1
        worst = 0.0
        for i in range(n):
            z = roots[i]
            p = complex(c[0], 0.0)
            dp = 0.0j
            for j in range(1, n + 1):
                dp = dp * z + p
                p = p * z + c[j]
            if p == 0.0:
                continue
            s = 0.0j
            for j in range(n):
                if j != i:
                    d = z - roots[j]
                    if d != 0.0:
                        s += 1.0 / d
            if dp == 0.0:
                w = p / (1e-300 + 0.0j)
                denom = 1.0
            else:
                ratio = p / dp
                denom = 1.0 - ratio * s
                w = ratio / denom if denom != 0.0 else ratio
            roots[i] = z - w
            mag = abs(w) / max(abs(z), 1e-300)
            if mag > worst:
                worst = mag
        if worst <= tol:
            break
    return it


@njit(cache=True, nogil=True)
def smith_radii(c, n, roots, radii):
    """Certified Smith radii for the approximations roots[:n]."""
    gamma = (4.0 * n + 6.0) * _U
    a0 = abs(c[0])
    for i in range(n):
        z = roots[i]
        p = complex(c[0], 0.0)
        az = abs(z)
        bound = abs(c[0])
        for j in range(1, n + 1):
            p = p * z + c[j]
            bound = bound * az + abs(c[j])
        resid = abs(p) + gamma * bound
        den = a0
        for j in range(n):
            if j != i:
                den *= abs(z - roots[j])
        if den == 0.0 or not math.isfinite(den):
            radii[i] = math.inf
        else:
            radii[i] = n * resid / den * (1.0 + 1e-10) + 1e-300
    return radii


@njit(cache=True, nogil=True)
def discs_isolated(roots, radii, n):
    for i in range(n):
        if not math.isfinite(radii[i]):
            return False
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) <= radii[i] + radii[j]:
                return False
    return True


@njit(cache=True, nogil=True)
def modulus_gap_clear(roots, radii, n, gap):
    """True when every pair of (isolated) discs has separated modulus intervals."""
    for i in range(n):
        for j in range(i + 1, n):
            if not _pair_modulus_clear(roots[i], radii[i], roots[j], radii[j], gap):
                return False
    return True


@njit(cache=True, nogil=True)
def _pair_modulus_clear(zi, ri, zj, rj, gap):
    ai = abs(zi)
    aj = abs(zj)
    lo_i, hi_i = ai - ri, ai + ri
    lo_j, hi_j = aj - rj, aj + rj
    if lo_i > hi_j * (1.0 + gap) + gap:
        return True
    if lo_j > hi_i * (1.0 + gap) + gap:
        return True
    return False


@njit(cache=True, nogil=True)
def _igcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True, nogil=True)
def ratio_screen_clear(roots, radii, n, orders, norders, gap):
    """True when no pair of roots can have a primitive k-th root of unity as
    quotient, for any k in orders[:norders].  Requires isolated discs."""
    two_pi = 2.0 * math.pi
    for i in range(n):
        for j in range(i + 1, n):
            zi, zj = roots[i], roots[j]
            ri, rj = radii[i], radii[j]
            if _pair_modulus_clear(zi, ri, zj, rj, gap):
                continue
            ai, aj = abs(zi), abs(zj)
            if ri >= ai or rj >= aj:
                return False
            half = math.asin(ri / ai) + math.asin(rj / aj)
            t = (math.atan2(zi.imag, zi.real) - math.atan2(zj.imag, zj.real)) / two_pi
            t -= math.floor(t)
            w = half / two_pi + gap
            for q in range(norders):
                k = orders[q]
                tk = t * k
                m = math.floor(tk + 0.5)
                if w * k >= 0.5:
                    return False
                if abs(tk - m) <= w * k + 1e-15 * k:
                    mm = int(m) % k
                    if _igcd(mm, k) == 1:
                        return False
    return True


def certified_roots(coeffs_desc, tol=TOL, max_iter=MAX_ITER):
    """(roots, radii, isolated) for a float coefficient vector (descending)."""
    c = np.asarray(coeffs_desc, dtype=np.float64)
    n = len(c) - 1
    roots = np.empty(n, dtype=np.complex128)
    radii = np.empty(n, dtype=np.float64)
    if n == 0:
        return roots, radii, True
    aberth(c, n, roots, tol, max_iter)
    smith_radii(c, n, roots, radii)
    return roots, radii, bool(discs_isolated(roots, radii, n))
