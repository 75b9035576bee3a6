"""Deciding degeneracy: two distinct roots whose quotient is a root of unity."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._numeric import certified_roots, modulus_gap_clear, ratio_screen_clear
from .polycore import (
    IntPoly,
    compose_scale,
    derivative,
    gcd_z,
    squarefree_part,
    strip_zero_roots,
)
from .resultants import (
    candidate_orders,
    cyclotomic_multiplicity,
    divides_cyclotomic,
    euler_phi,
    ratio_resultant,
    resultant,
    rotation_product,
)

DEFAULT_GAP = 1e-9


class NotIrreducibleError(ValueError):
    """Raised when class structure is requested for a reducible polynomial."""


@dataclass(frozen=True)
class DegeneracyReport:
    degenerate: bool
    witness_orders: frozenset = field(default_factory=frozenset)
    zero_root_multiplicity: int = 0
    reduced_degree: int = 0

    def to_dict(self) -> dict:
        return {
            "degenerate": self.degenerate,
            "witness_orders": sorted(self.witness_orders),
            "zero_root_multiplicity": self.zero_root_multiplicity,
            "reduced_degree": self.reduced_degree,
        }


@dataclass(frozen=True)
class ClassStructure:
    s: int
    ell: int


def reduce_core(f: IntPoly) -> tuple[int, IntPoly]:
    """(v, core): zero roots stripped, then the squarefree part."""
    if not f:
        raise ValueError("degeneracy of the zero polynomial")
    v, ft = strip_zero_roots(f)
    if ft.deg == 0:
        return v, IntPoly([1])
    return v, squarefree_part(ft)


def is_degenerate(f: IntPoly, mode: str = "safe") -> DegeneracyReport:
    v, core = reduce_core(f)
    d = core.deg
    if d <= 1:
        return DegeneracyReport(False, frozenset(), v, d)
    r = ratio_resultant(core)
    wit = frozenset(k for k in candidate_orders(d, mode) if divides_cyclotomic(r, k))
    return DegeneracyReport(bool(wit), wit, v, d)


def quadratic_closed_form(a0: int, a1: int, a2: int) -> bool:
    """Degeneracy of a0 X^2 + a1 X + a2 (a0 != 0) without resultants."""
    if a0 == 0:
        raise ValueError("leading coefficient must be nonzero")
    if a1 == 0:
        return a2 != 0
    q = a1 * a1
    p = a0 * a2
    return q == p or q == 2 * p or q == 3 * p


def _check_reduced(f: IntPoly):
    if not f or f.deg < 1:
        raise ValueError("fast_witness needs a nonconstant polynomial")
    if f.tail == 0:
        raise ValueError("fast_witness needs f(0) != 0")
    if f.deg > 1 and gcd_z(f, derivative(f)).deg != 0:
        raise ValueError("fast_witness needs a squarefree polynomial")


def fast_witness(f: IntPoly, k: int) -> bool:
    """Is some quotient of two roots of f a primitive k-th root of unity?"""
    if k < 2:
        raise ValueError("witness order must be >= 2")
    _check_reduced(f)
    if k == 2:
        return resultant(f, compose_scale(f, -1)) == 0
    return resultant(f, rotation_product(f, k)) == 0


def fast_witness_set(f: IntPoly, mode: str = "safe") -> frozenset:
    """Witness orders of an already reduced f, one resultant per order."""
    _check_reduced(f)
    if f.deg < 2:
        return frozenset()
    return frozenset(k for k in candidate_orders(f.deg, mode) if fast_witness(f, k))


def equivalence_stats(f: IntPoly) -> ClassStructure:
    """(s, ell) for irreducible f; T ordered root pairs with root-of-unity quotient."""
    n = f.deg
    if n is None or n < 2:
        raise ValueError("class structure needs degree >= 2")
    if f.tail == 0 or gcd_z(f, derivative(f)).deg != 0:
        raise NotIrreducibleError("input not irreducible")
    r = ratio_resultant(f)
    t = sum(euler_phi(k) * cyclotomic_multiplicity(r, k) for k in candidate_orders(n, "safe"))
    if t % n:
        raise NotIrreducibleError("input not irreducible")
    ell = 1 + t // n
    if n % ell:
        raise NotIrreducibleError("input not irreducible")
    return ClassStructure(n // ell, ell)


def _float_or_none(f: IntPoly):
    try:
        c = np.array([float(a) for a in f.coeffs], dtype=np.float64)
    except OverflowError:
        return None
    return c if np.all(np.isfinite(c)) else None


def prefilter_possible(
    f: IntPoly, gap: float = DEFAULT_GAP, angular: bool = False, mode: str = "safe"
) -> bool:
    """False only if numerics certify that no root quotient is a root of unity.

    The plain screen needs every pair of root discs to have separated moduli.
    With ``angular`` a pair of equal-looking moduli may also be cleared when its
    argument difference is certified away from every primitive k-th root of
    unity for k in the candidate orders.
    """
    if not f or f.deg < 2:
        raise ValueError("prefilter needs degree >= 2")
    c = _float_or_none(f)
    if c is None:
        return True
    try:
        roots, radii, isolated = certified_roots(c)
    except Exception:
        return True
    if not isolated:
        return True
    n = len(roots)
    if modulus_gap_clear(roots, radii, n, gap):
        return False
    if angular:
        orders = np.array(candidate_orders(n, mode), dtype=np.int64)
        if ratio_screen_clear(roots, radii, n, orders, len(orders), gap):
            return False
    return True
