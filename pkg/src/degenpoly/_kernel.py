"""Compiled per-partition census kernel.

For each polynomial in a partition the kernel records the height bucket and a
status byte: 0 non-degenerate, 1 degenerate, 2 undecided (left to the exact
Python path).  Degree-2 cores use the quadratic closed form.  Larger cores
first go through the numeric screen (optional), then an exact modular test
per candidate order k:

* Work modulo primes p = 1 (mod k), where Phi_k splits; eta is a primitive
  k-th root of unity mod p.  R_p = Res_Y(f(Y), f(eta Y)) mod p is the image of
  rho = Res_Y(f(Y), f(zeta Y)) in Z[zeta] under zeta -> eta.
* If R_p != 0 then rho != 0, and since conjugates of a root quotient are root
  quotients, no primitive k-th root of unity is a quotient.
* If R_p == 0 then p divides N_k = Norm(rho), an integer with
  |N_k| <= (|f|_1 M(f))^(d phi(k)) <= (|f|_1 |f|_2)^(d phi(k)).  Once the
  product of such primes exceeds the bound, N_k = 0 and k is a witness.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from ._numeric import aberth, discs_isolated, modulus_gap_clear, ratio_screen_clear, smith_radii
from .resultants import candidate_orders, euler_phi

CENSUS_MAX_ITER = 80
PRIME_TOP = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.4e14
    for a in (2, 3, 5, 7, 11, 13, 17):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(k: int) -> list[int]:
    out, m, q = [], k, 2
    while q * q <= m:
        if m % q == 0:
            out.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out.append(m)
    return out


def _primitive_root_of_unity(k: int, p: int) -> int:
    qs = _prime_factors(k)
    e = (p - 1) // k
    a = 2
    while True:
        eta = pow(a, e, p)
        if all(pow(eta, k // q, p) != 1 for q in qs):
            return eta
        a += 1


def primes_one_mod(k: int, count: int, top: int = PRIME_TOP) -> list[int]:
    """The ``count`` largest primes p < top with p = 1 (mod k)."""
    out = []
    t = (top - 2) // k
    while len(out) < count and t > 0:
        p = k * t + 1
        if _is_prime(p):
            out.append(p)
        t -= 1
    if len(out) < count:
        raise ValueError(f"not enough primes = 1 mod {k} below {top}")
    return out


class KernelTables:
    """Candidate orders per core degree with their primes and roots of unity."""

    def __init__(self, n: int, H: int, mode: str, lead_max: int):
        self.n, self.mode = n, mode
        ks: list[int] = []
        ord_start = np.zeros(n + 2, dtype=np.int64)
        ord_end = np.zeros(n + 2, dtype=np.int64)
        flat: list[int] = []
        for d in range(3, n + 1):
            ord_start[d] = len(flat)
            for k in candidate_orders(d, mode):
                if k not in ks:
                    ks.append(k)
                flat.append(ks.index(k))
            ord_end[d] = len(flat)
        # worst-case bits of |N_k| over the box, for any core degree <= n
        l1 = lead_max + n * H
        l2 = math.sqrt(lead_max**2 + n * H * H)
        logb = math.log2(l1 * l2)
        counts = [max(2, math.ceil((n * euler_phi(k) * logb + 8) / 30) + 1) for k in ks]
        width = max(counts) if counts else 1
        self.kval = np.array(ks or [2], dtype=np.int64)
        self.kphi = np.array([euler_phi(k) for k in ks] or [1], dtype=np.int64)
        self.nprimes = np.array(counts or [0], dtype=np.int64)
        self.primes = np.zeros((max(len(ks), 1), width), dtype=np.int64)
        self.etas = np.zeros((max(len(ks), 1), width), dtype=np.int64)
        for i, k in enumerate(ks):
            for j, p in enumerate(primes_one_mod(k, counts[i])):
                self.primes[i, j] = p
                self.etas[i, j] = _primitive_root_of_unity(k, p)
        self.flat = np.array(flat or [0], dtype=np.int64)
        self.ord_start, self.ord_end = ord_start, ord_end
        # k values for the numeric angular screen, per degree
        self.korders = self.kval[self.flat] if flat else np.zeros(1, dtype=np.int64)


@njit(cache=True, nogil=True)
def _powmod(a, e, p):
    r = 1
    a %= p
    while e > 0:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


@njit(cache=True, nogil=True)
def res_mod(A, da, B, db, p, wa, wb):
    """Res(A, B) mod p for descending A[:da+1], B[:db+1] with nonzero leads."""
    for i in range(da + 1):
        wa[i] = A[i] % p
    for i in range(db + 1):
        wb[i] = B[i] % p
    a, b = wa, wb
    res = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if (da & 1) and (db & 1):
            res = p - 1
    while True:
        if db == 0:
            return res * _powmod(b[0], da, p) % p
        inv = _powmod(b[0], p - 2, p)
        # a <- a mod b, in place
        for i in range(da - db + 1):
            q = a[i] * inv % p
            if q:
                for j in range(1, db + 1):
                    a[i + j] = (a[i + j] - q * b[j]) % p
            a[i] = 0
        off = da - db + 1
        dr = db - 1
        while dr >= 0 and a[off + (db - 1 - dr)] == 0:
            dr -= 1
        if dr < 0:
            return 0
        start = off + (db - 1 - dr)
        if (da & 1) and (db & 1):
            res = p - res if res else 0
        res = res * _powmod(b[0], da - dr, p) % p
        # shift remainder to the front of a, then swap roles
        for i in range(dr + 1):
            a[i] = a[start + i]
        a, b = b, a
        da, db = db, dr


@njit(cache=True, nogil=True)
def order_test(c, d, kidx, need_bits, primes, etas, nprimes, rot, wa, wb):
    """0: k cleared, 1: k is a witness, 2: primes exhausted."""
    bits = 0.0
    for j in range(nprimes[kidx]):
        p = primes[kidx, j]
        eta = etas[kidx, j]
        e = 1
        for i in range(d, -1, -1):
            rot[i] = (c[i] % p) * e % p
            e = e * eta % p
        if res_mod(c, d, rot, d, p, wa, wb) != 0:
            return 0
        bits += math.log2(p)
        if bits > need_bits:
            return 1
    return 2


@njit(cache=True, nogil=True)
def classify_core(c, d, prefilter, gap, kval, kphi, flat, ord_start, ord_end, korders,
                  primes, etas, nprimes, fc, roots, radii, rot, wa, wb):
    if d <= 1:
        return 0
    if d == 2:
        a0, a1, a2 = c[0], c[1], c[2]
        if a1 == 0:
            return 1 if a2 != 0 else 0
        q = a1 * a1
        pr = a0 * a2
        return 1 if (q == pr or q == 2 * pr or q == 3 * pr) else 0
    lo, hi = ord_start[d], ord_end[d]
    if prefilter:
        for i in range(d + 1):
            fc[i] = float(c[i])
        aberth(fc, d, roots, 1e-14, 80)
        smith_radii(fc, d, roots, radii)
        if discs_isolated(roots, radii, d):
            if modulus_gap_clear(roots, radii, d, gap):
                return 0
            if ratio_screen_clear(roots, radii, d, korders[lo:hi], hi - lo, gap):
                return 0
    l1 = 0.0
    l2 = 0.0
    for i in range(d + 1):
        v = abs(float(c[i]))
        l1 += v
        l2 += v * v
    logb = math.log2(l1 * math.sqrt(l2))
    undecided = False
    for q in range(lo, hi):
        kidx = flat[q]
        need = d * kphi[kidx] * logb + 4.0
        st = order_test(c, d, kidx, need, primes, etas, nprimes, rot, wa, wb)
        if st == 1:
            return 1
        if st == 2:
            undecided = True
    return 2 if undecided else 0


@njit(cache=True, nogil=True)
def run_partition(n, H, monic, lead, prefilter, gap, kval, kphi, flat, ord_start, ord_end,
                  korders, primes, etas, nprimes, status, hist_total, hist_deg):
    """Classify every polynomial of one partition.

    Monic: a_0 = 1, a_1 = lead, a_2..a_n free.  General: a_0 = lead, a_1..a_n
    free.  Free coefficients run over [-H, H] in odometer order, last fastest.
    """
    nfree = n - 1 if monic else n
    first = 2 if monic else 1
    coef = np.zeros(n + 1, dtype=np.int64)
    coef[0] = 1 if monic else lead
    if monic:
        coef[1] = lead
    for i in range(first, n + 1):
        coef[i] = -H
    c = np.zeros(n + 1, dtype=np.int64)
    fc = np.zeros(n + 1, dtype=np.float64)
    roots = np.zeros(n, dtype=np.complex128)
    radii = np.zeros(n, dtype=np.float64)
    rot = np.zeros(n + 1, dtype=np.int64)
    wa = np.zeros(n + 1, dtype=np.int64)
    wb = np.zeros(n + 1, dtype=np.int64)
    total = (2 * H + 1) ** nfree
    for idx in range(total):
        h = abs(lead)
        for i in range(first, n + 1):
            v = abs(coef[i])
            if v > h:
                h = v
        hist_total[h] += 1
        d = n
        while d > 0 and coef[d] == 0:
            d -= 1
        for i in range(d + 1):
            c[i] = coef[i]
        st = classify_core(c, d, prefilter, gap, kval, kphi, flat, ord_start, ord_end, korders,
                           primes, etas, nprimes, fc, roots, radii, rot, wa, wb)
        status[idx] = st
        if st == 1:
            hist_deg[h] += 1
        # advance odometer
        i = n
        while i >= first:
            if coef[i] < H:
                coef[i] += 1
                break
            coef[i] = -H
            i -= 1
    return total
