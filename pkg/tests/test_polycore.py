import pytest
from hypothesis import given, strategies as st

from degenpoly.polycore import (
    ONE, X, IntPoly, compose_power, content, decompose_power, degree, derivative, div_exact,
    eval_int, gcd_z, height, mul, primitive_part, pseudo_rem, squarefree_part, strip_zero_roots,
)
from strategies import polys

P = IntPoly


def test_degree_examples():
    assert degree(P([1, 0, -5, 2])) == 3
    assert degree(P([7])) == 0
    assert degree(P([])) is None
    assert degree(P([0, 0])) is None


def test_height_examples():
    assert height(P([1, 0, -5, 2])) == 5
    assert height(P([-9])) == 9
    assert height(P([1, 0, 0, 0, 0])) == 1
    assert height(P()) == 0


def test_arithmetic_examples():
    assert mul(X + 1, X - 1) == P([1, 0, -1])
    assert derivative(X**3) == P([3, 0, 0])
    assert eval_int(P([1, 0, -2]), 3) == 7
    assert (X + 1) - (X + 1) == P()
    assert not P()


def test_content_primitive_examples():
    assert content(P([6, 0, 4])) == 2 and primitive_part(P([6, 0, 4])) == P([3, 0, 2])
    assert content(P([-1, 1])) == 1 and primitive_part(P([-1, 1])) == P([1, -1])
    assert content(P([5])) == 5 and primitive_part(P([5])) == ONE
    with pytest.raises(ValueError):
        content(P())
    with pytest.raises(ValueError):
        primitive_part(P())


def test_gcd_examples():
    assert gcd_z(P([1, 0, -1]), P([1, 0, 0, -1])) == P([1, -1])
    assert gcd_z(P([1, 0, 1]), P([1, 0, -1])) == ONE
    f = (X - 2) ** 2 * (X + 3)
    g = (X - 2) * (X + 5)
    assert gcd_z(f, g) == X - 2
    with pytest.raises(ValueError):
        gcd_z(P(), P())


def test_squarefree_examples():
    assert squarefree_part((X - 1) ** 2 * (X + 2)) == (X - 1) * (X + 2)
    assert squarefree_part(P([1, 0, -1])) == P([1, 0, -1])
    assert squarefree_part(P([4, 0, 0])) == X
    with pytest.raises(ValueError):
        squarefree_part(P())


def test_strip_zero_roots_examples():
    assert strip_zero_roots(P([1, 1, 0, 0])) == (2, X + 1)
    assert strip_zero_roots(P([1, 0, 1])) == (0, P([1, 0, 1]))
    assert strip_zero_roots(X**5) == (5, ONE)
    with pytest.raises(ValueError):
        strip_zero_roots(P())


def test_power_examples():
    assert compose_power(P([1, -2, -2]), 2) == P([1, 0, -2, 0, -2])
    assert decompose_power(P([1, 0, 0, 1, 0, 0, 1])) == (3, P([1, 1, 1]))
    assert decompose_power(P([1, 1, 0])) == (1, P([1, 1, 0]))
    with pytest.raises(ValueError):
        compose_power(P(), 2)
    with pytest.raises(ValueError):
        decompose_power(P([3]))


def test_immutable():
    f = P([1, 2])
    with pytest.raises(AttributeError):
        f.coeffs = (3,)


@given(polys(0, 4), polys(0, 4))
def test_gcd_divides_both(f, g):
    d = gcd_z(f, g)
    assert div_exact(f, d) is not None
    assert div_exact(g, d) is not None
    assert d.lc > 0


@given(polys(0, 3), polys(0, 3), polys(1, 2))
def test_gcd_common_factor(f, g, h):
    h = primitive_part(h)
    lhs = gcd_z(mul(f, h), mul(g, h))
    rhs = primitive_part(mul(h, gcd_z(f, g)))
    assert lhs == rhs


@given(polys(1, 5))
def test_squarefree_has_constant_gcd_with_derivative(f):
    s = squarefree_part(f)
    if s.deg >= 1:
        assert gcd_z(s, derivative(s)).deg == 0
        # s divides f, and f divides a power of s (same roots)
        div_exact(f, s)
        assert pseudo_rem(s ** f.deg, primitive_part(f)) == P()


@given(polys(1, 4), st.integers(1, 4))
def test_decompose_compose(g, ell):
    if g.tail == 0 and g.deg >= 1:
        g = g + 1
    m, h = decompose_power(compose_power(g, ell))
    assert m % ell == 0
    m0, _ = decompose_power(g)
    if m0 == 1:
        assert m == ell and h == g
    assert compose_power(h, m) == compose_power(g, ell)


@given(polys(0, 4), polys(0, 4))
def test_height_product_bound(f, g):
    assert height(mul(f, g)) <= (min(f.deg, g.deg) + 1) * height(f) * height(g)


@given(polys(0, 4), polys(0, 4), st.integers(-5, 5))
def test_ring_laws(f, g, t):
    assert eval_int(f * g, t) == eval_int(f, t) * eval_int(g, t)
    assert eval_int(f + g, t) == eval_int(f, t) + eval_int(g, t)
    assert mul(f, g).deg == f.deg + g.deg
