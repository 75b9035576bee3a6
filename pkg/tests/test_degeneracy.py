import cmath
import itertools
import random

import pytest
from hypothesis import given, strategies as st

from degenpoly.degeneracy import (
    NotIrreducibleError, equivalence_stats, fast_witness, fast_witness_set, is_degenerate,
    prefilter_possible, quadratic_closed_form, reduce_core,
)
from degenpoly.polycore import IntPoly as P, X, compose_power, compose_scale, mul, negate, reverse
from degenpoly.resultants import candidate_orders
from strategies import polys

import numpy as np


def _numeric_degenerate(f, tol=1e-7):
    _, core = reduce_core(f)
    if core.deg < 2:
        return False
    roots = np.roots([float(c) for c in core.coeffs])
    for i, j in itertools.permutations(range(len(roots)), 2):
        q = roots[i] / roots[j]
        if abs(abs(q) - 1) < tol:
            for k in candidate_orders(core.deg):
                if abs(q**k - 1) < tol:
                    return True
    return False


def test_examples():
    assert is_degenerate(P([1, 0, -2])).witness_orders == {2}
    assert is_degenerate(P([1, 1, 1])).witness_orders == {3}
    assert is_degenerate(P([1, 2, 2])).witness_orders == {4}
    assert is_degenerate(P([1, 3, 3])).witness_orders == {6}
    assert not is_degenerate(P([1, -1, -1])).degenerate
    assert is_degenerate(P([1, 0, 1, 0])).witness_orders == {2}  # X(X^2+1) keeps its pair
    rep = is_degenerate(P([1, 0, 0, 0]))
    assert not rep.degenerate and rep.zero_root_multiplicity == 3 and rep.reduced_degree == 0
    # a repeated root is not a pair of distinct roots
    assert not is_degenerate(P([1, -2, 1])).degenerate
    with pytest.raises(ValueError):
        is_degenerate(P())


def test_report_dict():
    d = is_degenerate(P([1, 0, 0, 0, 1])).to_dict()
    assert d["degenerate"] and d["witness_orders"] == sorted(d["witness_orders"])
    assert set(d) == {"degenerate", "witness_orders", "zero_root_multiplicity", "reduced_degree"}


@given(polys(2, 5, h=12))
def test_scaling_sign_and_reversal_invariance(f):
    v = is_degenerate(f).degenerate
    assert is_degenerate(negate(f)).degenerate == v
    assert is_degenerate(compose_scale(f, -1)).degenerate == v
    assert is_degenerate(compose_scale(f, 2)).degenerate == v
    if f.tail != 0:
        assert is_degenerate(reverse(f)).degenerate == v


@given(polys(1, 3, h=9), st.integers(2, 3))
def test_power_composition_is_degenerate(g, ell):
    if g.tail == 0:
        return
    f = compose_power(g, ell)
    rep = is_degenerate(f)
    assert rep.degenerate
    assert any(ell % k == 0 for k in rep.witness_orders)


def test_against_numeric_roots():
    rng = random.Random(17)
    ndeg = 0
    for _ in range(400):
        n = rng.randint(2, 5)
        f = P([rng.randint(1, 5)] + [rng.randint(-5, 5) for _ in range(n)])
        v = is_degenerate(f).degenerate
        ndeg += v
        assert v == _numeric_degenerate(f), f
    assert ndeg > 10


def test_near_miss_quotient_is_not_degenerate():
    # complex pair whose quotient is within 1e-7 of a 16th root of unity
    for f in (P([1, -6, 4, -2]), P([1, 6, 4, 2])):
        assert not is_degenerate(f).degenerate
        assert not fast_witness_set(f)


def test_tight_mode_agrees_on_small_degree():
    rng = random.Random(4)
    for _ in range(200):
        f = P([1] + [rng.randint(-6, 6) for _ in range(rng.randint(2, 4))])
        assert is_degenerate(f, "safe").degenerate == is_degenerate(f, "tight").degenerate


def test_quadratic_closed_form_exhaustive():
    for a0 in range(-6, 7):
        if a0 == 0:
            continue
        for a1 in range(-12, 13):
            for a2 in range(-12, 13):
                assert quadratic_closed_form(a0, a1, a2) == is_degenerate(P([a0, a1, a2])).degenerate
    with pytest.raises(ValueError):
        quadratic_closed_form(0, 1, 1)


def test_fast_witness_examples_and_refusals():
    assert fast_witness(P([1, 0, -2]), 2)
    assert fast_witness(P([1, 1, 1]), 3)
    assert not fast_witness(P([1, 1, 1]), 6)
    for bad in (P([1, 0]), P([1, -2, 1]), P([3])):
        with pytest.raises(ValueError):
            fast_witness(bad, 2)
    with pytest.raises(ValueError):
        fast_witness(P([1, 1, 1]), 1)


@given(polys(2, 4, h=15))
def test_fast_witness_matches_resultant_criterion(f):
    _, core = reduce_core(f)
    if core.deg < 2:
        return
    assert fast_witness_set(core) == is_degenerate(f).witness_orders


def _cs(f):
    c = equivalence_stats(f)
    return c.s, c.ell


def test_equivalence_stats():
    assert _cs(P([1, 0, -2])) == (1, 2)
    assert _cs(P([1, 0, 0, 0, -2])) == (1, 4)
    assert _cs(P([1, 0, -2, 0, -2])) == (2, 2)
    assert _cs(P([1, 0, 0, -2])) == (1, 3)
    assert _cs(P([1, -1, -1])) == (2, 1)


@given(polys(1, 2, h=6), st.integers(2, 3))
def test_equivalence_on_irreducible_powers(g, ell):
    from degenpoly.irreducibility import is_irreducible_q

    f = compose_power(g, ell)
    if f.deg > 4 or g.tail == 0 or not is_irreducible_q(f):
        return
    cs = equivalence_stats(f)
    assert cs.s * cs.ell == f.deg and cs.ell % ell == 0


def test_equivalence_refuses_reducible():
    for f in (mul(X - 1, X + 1) ** 2, P([1, 0, 0]), P([1, -2, 1])):
        with pytest.raises(NotIrreducibleError):
            equivalence_stats(f)
    with pytest.raises(ValueError):
        equivalence_stats(X - 2)


def test_prefilter_contract():
    rng = random.Random(23)
    cleared = 0
    for _ in range(600):
        n = rng.randint(2, 6)
        f = P([rng.randint(1, 9)] + [rng.randint(-20, 20) for _ in range(n - 1)] + [rng.choice([-7, -3, 1, 5])])
        _, core = reduce_core(f)
        if core.deg < 2:
            continue
        deg = is_degenerate(f).degenerate
        for angular in (False, True):
            ok = prefilter_possible(core, angular=angular)
            if deg:
                assert ok, f
            cleared += not ok
    assert cleared > 300
    with pytest.raises(ValueError):
        prefilter_possible(X - 1)


def test_prefilter_keeps_equal_modulus_pairs():
    assert prefilter_possible(P([1, 0, 4]))
    assert prefilter_possible(P([1, 0, 0, 0, 1]), angular=True)
    # conjugate pair with quotient exp(2 i t) for irrational t/pi: angular test clears it
    assert prefilter_possible(P([1, -1, 2]))
    assert not prefilter_possible(P([1, -1, 2]), angular=True)
