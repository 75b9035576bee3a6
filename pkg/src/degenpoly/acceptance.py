"""The twelve acceptance checks, shared by ``degenpoly verify`` and the tests.

Each check returns a CriterionResult.  Quick mode shrinks only the expensive
census sizes (criteria 1, 2, 3, 5, 11, 12) and the random sample counts; the
thresholds are unchanged, so a quick pass is a smoke test rather than the
real criterion.
"""

from __future__ import annotations

import io
import math
import os
import random
import tempfile
import time
from dataclasses import dataclass

import numpy as np

from .analytic import cauchy_radius, mahler_bounds_check, roots_numeric
from .census import CensusConfig, run_census
from .degeneracy import (
    equivalence_stats,
    fast_witness,
    fast_witness_set,
    is_degenerate,
    quadratic_closed_form,
    reduce_core,
)
from .families import random_eisenstein_instance, verify_family
from .oracles import cubic_linear_family_count, d2_closed, i2_closed, r2_closed, r2star_closed
from .polycore import IntPoly, compose_scale, negate, reverse
from .records import records_to_csv

SEED = 20240607


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _random_poly(rng: random.Random, n: int, h: int) -> IntPoly:
    c = [rng.randint(-h, h) for _ in range(n + 1)]
    while c[0] == 0:
        c[0] = rng.randint(-h, h)
    return IntPoly(c)


def c1_quadratic_monic(quick: bool = False) -> tuple[bool, str]:
    H = 100 if quick else 500
    recs = run_census(CensusConfig(2, H, "monic", split=True))
    bad = [r.H for r in recs if (r.D, r.I, r.R) != (d2_closed(r.H), i2_closed(r.H), r2_closed(r.H))]
    # spot check the closed form against the resultant path inside the box
    rng = random.Random(SEED)
    spot_bad = 0
    for _ in range(300 if quick else 2000):
        a1, a2 = rng.randint(-H, H), rng.randint(-H, H)
        spot_bad += quadratic_closed_form(1, a1, a2) != is_degenerate(IntPoly([1, a1, a2])).degenerate
    last = recs[-1]
    ok = not bad and spot_bad == 0
    return ok, f"H<={H}: mismatched H {bad[:5]}, spot mismatches {spot_bad}; D,I,R({H})={last.D},{last.I},{last.R}"


def c2_quadratic_general(quick: bool = False) -> tuple[bool, str]:
    H = 20 if quick else 60
    recs = run_census(CensusConfig(2, H, "general", split=True))
    bad = [r.H for r in recs if r.R != r2star_closed(r.H)]
    return not bad, f"H<={H}: mismatched H {bad[:5]}; R*({H})={recs[-1].R}"


def c3_d2star_constant(quick: bool = False) -> tuple[bool, str]:
    H = 40 if quick else 100
    rec = run_census(CensusConfig(2, H, "general"))[-1]
    ratio = rec.D / H**2
    return 3.7 <= ratio <= 4.3, f"D*({H})/H^2 = {ratio:.4f}, band [3.7, 4.3]"


def c4_cubic_family(quick: bool = False) -> tuple[bool, str]:
    hs = (10, 100, 1000) if quick else (10, 100, 1000, 10000)
    out = []
    ok = True
    for H in hs:
        direct = 0
        a = np.arange(-H, H + 1, dtype=np.int64)
        seen = set() if H <= 100 else None
        for b in range(-H, H + 1):
            if b == 0:
                continue
            # coefficients of X^3 + a X^2 + b X + a b
            hgt = np.maximum(np.maximum(np.abs(a), abs(b)), np.abs(a * b))
            mask = hgt <= H
            direct += int(mask.sum())
            if seen is not None:
                seen.update((int(x), b, int(x) * b) for x in a[mask])
        if seen is not None and len(seen) != direct:
            ok = False
        formula = cubic_linear_family_count(H)
        ok &= direct == formula
        out.append(f"{H}:{direct}/{formula}")
    return ok, "direct/formula " + " ".join(out)


def c5_cubic_trend(quick: bool = False) -> tuple[bool, str]:
    hs = (20, 40, 60) if quick else (50, 100, 150)
    recs = run_census(CensusConfig(3, hs[-1], "monic", threads=_threads()))
    rat = {H: recs[H - 1].D / (H * math.log(H)) for H in hs}
    lo, hi = hs[0], hs[-1]
    ok = 2.6 <= rat[hi] <= 5.4 and abs(rat[hi] - 4) <= abs(rat[lo] - 4) + 0.3
    return ok, "D_3/(H ln H): " + ", ".join(f"{H}:{rat[H]:.4f}" for H in hs)


def c6_families(quick: bool = False) -> tuple[bool, str]:
    rng = random.Random(SEED)
    count = 20 if quick else 100
    fails = []
    for n, ell in ((4, 2), (6, 2), (6, 3)):
        m = n // ell
        for _ in range(count):
            spec = random_eisenstein_instance(m, ell, 50, rng)
            rep = verify_family(spec)
            ok = rep.status("degenerate") == "pass" and max(abs(c) for c in spec.produced.coeffs) <= 50
            if n == 4:
                cs = equivalence_stats(spec.produced)
                ok &= rep.status("irreducible") == "pass" and (cs.s, cs.ell) == (2, 2)
            if not ok:
                fails.append(str(spec.produced))
    return not fails, f"{3 * count} instances, failures {fails[:3]}"


def degeneracy_variants(f: IntPoly) -> list[IntPoly]:
    out = [compose_scale(f, -1), negate(f), compose_scale(f, 2), compose_scale(f, 3)]
    if f.tail != 0:
        out.append(reverse(f))
    return out


def c7_invariance(quick: bool = False) -> tuple[bool, str]:
    rng = random.Random(SEED + 7)
    count = 200 if quick else 1000
    bad = []
    ndeg = 0
    for _ in range(count):
        f = _random_poly(rng, rng.randint(2, 5), 20)
        v = is_degenerate(f).degenerate
        ndeg += v
        if any(is_degenerate(g).degenerate != v for g in degeneracy_variants(f)):
            bad.append(str(f))
    return not bad, f"{count} polynomials ({ndeg} degenerate), failures {bad[:3]}"


def c8_oracle_equivalence(quick: bool = False) -> tuple[bool, str]:
    rng = random.Random(SEED + 8)
    count = 100 if quick else 500
    bad = []
    for _ in range(count):
        f = _random_poly(rng, rng.randint(1, 4), 30)
        rep = is_degenerate(f)
        _, core = reduce_core(f)
        fw = fast_witness_set(core) if core.deg >= 2 else frozenset()
        if set(rep.witness_orders) != set(fw):
            bad.append(str(f))
    qbad = 0
    for a0 in range(1, 16):
        for a1 in range(-15, 16):
            for a2 in range(-15, 16):
                qbad += quadratic_closed_form(a0, a1, a2) != is_degenerate(IntPoly([a0, a1, a2])).degenerate
    return not bad and qbad == 0, f"{count} witness sets, failures {bad[:3]}; quadratic mismatches {qbad}"


def c9_finiteness(quick: bool = False) -> tuple[bool, str]:
    rng = random.Random(SEED + 9)
    count = 10 if quick else 50
    worst = 0
    for _ in range(count):
        a1 = rng.randint(-20, 20)
        a2 = rng.choice([x for x in range(-20, 21) if x])
        for k in (2, 3, 4, 6):
            hits = 0
            for a3 in range(-100, 101):
                _, core = reduce_core(IntPoly([1, a1, a2, a3]))
                if core.deg >= 1 and fast_witness(core, k):
                    hits += 1
            worst = max(worst, hits)
    return worst <= 3, f"{count} prefixes, max #a_3 per order = {worst}"


def c10_analytic(quick: bool = False) -> tuple[bool, str]:
    rng = random.Random(SEED + 10)
    count = 1000 if quick else 10000
    mb = cc = 0
    for _ in range(count):
        f = _random_poly(rng, rng.randint(2, 6), 100)
        if not mahler_bounds_check(f):
            mb += 1
        if any(c for c in f.coeffs[1:]):
            r = cauchy_radius(f)
            if any(abs(z) > r * (1 + 1e-8) + 1e-8 for z, _ in roots_numeric(f)):
                cc += 1
    return mb == 0 and cc == 0, f"{count} polynomials: Mahler failures {mb}, Cauchy failures {cc}"


def c11_quartic_band(quick: bool = False) -> tuple[bool, str]:
    hs = (5, 10, 15, 20) if quick else (10, 20, 30, 40)
    recs = run_census(CensusConfig(4, hs[-1], "monic", split=True, threads=_threads()))
    ratios = [recs[H - 1].I / H**2 for H in hs]
    spread = max(ratios) / min(ratios)
    return spread <= 3, "I_4/H^2: " + ", ".join(f"{H}:{q:.3f}" for H, q in zip(hs, ratios)) + f"; max/min {spread:.3f}"


class _Interrupt(Exception):
    pass


def _csv(cfg: CensusConfig, on_partition=None) -> str:
    return records_to_csv(run_census(cfg, on_partition), timing=False)


def c12_determinism(quick: bool = False) -> tuple[bool, str]:
    H = 20 if quick else 60
    base = CensusConfig(3, H, "monic", threads=1)
    ref = _csv(base)
    many = _csv(CensusConfig(3, H, "monic", threads=8))
    nopf = _csv(CensusConfig(3, H, "monic", prefilter=False))
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "ckpt.jsonl")
        cfg = CensusConfig(3, H, "monic", checkpoint_path=path)
        seen = [0]

        def stop(part, tally):
            seen[0] += 1
            if seen[0] == H:
                raise _Interrupt

        try:
            _csv(cfg, stop)
            interrupted = False
        except _Interrupt:
            interrupted = True
        resumed = _csv(cfg)
    checks = {"threads": many == ref, "prefilter": nopf == ref, "resume": interrupted and resumed == ref}
    return all(checks.values()), ", ".join(f"{k} {'same' if v else 'DIFFERENT'}" for k, v in checks.items())


CRITERIA = (
    (1, "degree-2 monic exactness", c1_quadratic_monic),
    (2, "degree-2 general R* exactness", c2_quadratic_general),
    (3, "D_2* constant band", c3_d2star_constant),
    (4, "cubic subfamily exactness", c4_cubic_family),
    (5, "D_3 trend toward 4", c5_cubic_trend),
    (6, "family verification", c6_families),
    (7, "degeneracy invariances", c7_invariance),
    (8, "oracle equivalence", c8_oracle_equivalence),
    (9, "resultant finiteness", c9_finiteness),
    (10, "analytic suite", c10_analytic),
    (11, "I_4 band", c11_quartic_band),
    (12, "census determinism", c12_determinism),
)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("DEGEN_THREADS", "1")))
    except ValueError:
        return 1


def run_criterion(number: int, quick: bool = False) -> CriterionResult:
    for num, name, fn in CRITERIA:
        if num == number:
            t0 = time.perf_counter()
            try:
                ok, detail = fn(quick)
            except Exception as exc:  # a crash is a failure, reported not raised
                ok, detail = False, f"error: {exc!r}"
            return CriterionResult(num, name, bool(ok), detail, time.perf_counter() - t0)
    raise KeyError(number)


def run_all(quick: bool = False, stream: io.TextIOBase | None = None) -> list[CriterionResult]:
    out = []
    for num, _, _ in CRITERIA:
        res = run_criterion(num, quick)
        out.append(res)
        if stream is not None:
            print(res.line(), file=stream, flush=True)
    return out
