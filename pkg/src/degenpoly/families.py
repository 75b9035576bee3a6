"""Explicit constructions of degenerate polynomials with checkable expectations."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .degeneracy import NotIrreducibleError, equivalence_stats, is_degenerate
from .irreducibility import MAX_DEGREE, is_irreducible_q
from .polycore import IntPoly, compose_power, decompose_power, mul

QUADRATIC_KINDS = ("sqrt", "order2", "order3", "order4", "order6")


class FamilyParameterError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    name: str
    parameters: tuple
    produced: IntPoly
    expect_degenerate: bool = True
    expect_irreducible: bool | None = None
    expect_class_size: int | None = None
    expect_power: int | None = None  # f = g(X^power) with power maximal


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    observed: object
    status: str  # pass, fail or unverified


@dataclass
class FamilyReport:
    spec: FamilySpec
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def status(self, name: str) -> str:
        for c in self.checks:
            if c.name == name:
                return c.status
        return "absent"

    def to_dict(self) -> dict:
        return {
            "family": self.spec.name,
            "parameters": list(self.spec.parameters),
            "polynomial": str(self.spec.produced),
            "passed": self.passed,
            "checks": [
                {"name": c.name, "expected": c.expected, "observed": c.observed, "status": c.status}
                for c in self.checks
            ],
        }


def _need(cond: bool, msg: str):
    if not cond:
        raise FamilyParameterError(msg)


def _eisenstein_g(lead: int, b) -> IntPoly:
    m = len(b)
    return IntPoly([lead] + [-2 * x for x in b[:-1]] + [-2 * (2 * b[-1] - 1)])


def eisenstein_power_family(m: int, ell: int, b) -> FamilySpec:
    """f = g(X^ell), g = X^m - 2 b_1 X^(m-1) - ... - 2 b_(m-1) X - 2 (2 b_m - 1)."""
    b = [int(x) for x in b]
    _need(m >= 1, "m must be >= 1")
    _need(ell >= 2, "ell must be >= 2")
    _need(len(b) == m, f"need exactly m = {m} values b_1..b_m")
    _need(all(x >= 1 for x in b), "every b_i must be >= 1")
    f = compose_power(_eisenstein_g(1, b), ell)
    return FamilySpec("eisenstein_power", (m, ell, tuple(b)), f, True, True, ell, ell)


def eisenstein_power_family_general(m: int, ell: int, b0: int, b) -> FamilySpec:
    """As above with leading coefficient 2 b_0 - 1."""
    b = [int(x) for x in b]
    _need(b0 >= 1, "b0 must be >= 1")
    base = eisenstein_power_family(m, ell, b)
    f = compose_power(_eisenstein_g(2 * b0 - 1, b), ell)
    return FamilySpec("eisenstein_power_general", (m, ell, b0, tuple(b)), f, True, True, ell,
                      base.expect_power)


def linear_times_quadratic(a: int, b: int) -> FamilySpec:
    """(X + a)(X^2 + b), b != 0."""
    _need(b != 0, "b must be nonzero")
    f = mul(IntPoly([1, a]), IntPoly([1, 0, b]))
    return FamilySpec("linear_times_quadratic", (a, b), f, True, False)


def linear_times_quadratic_general(a: int, b: int, c: int, d: int) -> FamilySpec:
    """(aX + b)(cX^2 + d) with a, c, d nonzero."""
    _need(a != 0 and c != 0, "a and c must be nonzero")
    _need(d != 0, "d must be nonzero")
    f = mul(IntPoly([a, b]), IntPoly([c, 0, d]))
    return FamilySpec("linear_times_quadratic_general", (a, b, c, d), f, True, False)


def cyclo_times_poly(g: IntPoly) -> FamilySpec:
    """(X^2 + 1) g(X); reducible unless g is constant."""
    _need(bool(g), "g must be nonzero")
    f = mul(IntPoly([1, 0, 1]), g)
    return FamilySpec("cyclo_times_poly", tuple(g.coeffs), f, True, g.deg == 0)


def quadratic_degenerate_family(kind: str, a: int) -> FamilySpec:
    """X^2 - a (quotient -1), X^2 + 2aX + 2a^2 (quotient +-i),
    X^2 + aX + a^2 (primitive cube roots), X^2 + 3aX + 3a^2 (primitive sixth roots)."""
    _need(kind in QUADRATIC_KINDS, f"kind must be one of {QUADRATIC_KINDS}")
    _need(a != 0, "a must be nonzero")
    if kind in ("sqrt", "order2"):
        f = IntPoly([1, 0, -a])
    elif kind == "order4":
        f = IntPoly([1, 2 * a, 2 * a * a])
    elif kind == "order3":
        f = IntPoly([1, a, a * a])
    else:
        f = IntPoly([1, 3 * a, 3 * a * a])
    return FamilySpec(f"quadratic_{kind}", (kind, a), f, True, True)


def random_eisenstein_instance(m: int, ell: int, H: int, rng: random.Random, b0: int | None = None) -> FamilySpec:
    """Random instance whose height stays <= H: b_i <= H // 2, b_m <= H // 4."""
    _need(H >= 4, "H must be >= 4")
    b = [rng.randint(1, H // 2) for _ in range(m - 1)] + [rng.randint(1, H // 4)]
    if b0 is None:
        return eisenstein_power_family(m, ell, b)
    return eisenstein_power_family_general(m, ell, b0, b)


def verify_family(spec: FamilySpec) -> FamilyReport:
    rep = FamilyReport(spec)
    f = spec.produced
    deg = is_degenerate(f)
    rep.checks.append(Check("degenerate", spec.expect_degenerate, deg.degenerate,
                            "pass" if deg.degenerate == spec.expect_degenerate else "fail"))
    irreducible = None
    if spec.expect_irreducible is not None:
        if 1 <= f.deg <= MAX_DEGREE:
            irreducible = is_irreducible_q(f)
            ok = irreducible == spec.expect_irreducible
            rep.checks.append(Check("irreducible", spec.expect_irreducible, irreducible, "pass" if ok else "fail"))
        else:
            rep.checks.append(Check("irreducible", spec.expect_irreducible, None, "unverified"))
    if spec.expect_class_size is not None:
        ell = spec.expect_class_size
        wit_ok = any(ell % k == 0 for k in deg.witness_orders)
        rep.checks.append(Check("witness_divides_ell", ell, sorted(deg.witness_orders), "pass" if wit_ok else "fail"))
        if irreducible is False:
            rep.checks.append(Check("class_size", ell, None, "fail"))
        elif irreducible is None and spec.expect_irreducible:
            rep.checks.append(Check("class_size", ell, None, "unverified"))
        else:
            try:
                cs = equivalence_stats(f)
                rep.checks.append(Check("class_size", ell, [cs.s, cs.ell], "pass" if cs.ell == ell else "fail"))
            except NotIrreducibleError:
                rep.checks.append(Check("class_size", ell, None, "fail"))
    if spec.expect_power is not None:
        m, _ = decompose_power(f)
        rep.checks.append(Check("power_shape", spec.expect_power, m, "pass" if m == spec.expect_power else "fail"))
    return rep


FAMILY_BUILDERS = {
    "eisenstein_power": eisenstein_power_family,
    "eisenstein_power_general": eisenstein_power_family_general,
    "linear_times_quadratic": linear_times_quadratic,
    "linear_times_quadratic_general": linear_times_quadratic_general,
    "cyclo_times_poly": cyclo_times_poly,
    "quadratic": quadratic_degenerate_family,
}
