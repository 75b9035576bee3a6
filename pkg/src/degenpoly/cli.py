"""Command-line interface.

Polynomials are given as expressions (``"X^4 - 2X^2 - 2"``) or as coefficient
lists in DESCENDING powers, a_0 first (``"coeffs: 3,0,-2"`` is 3X^2 - 2).

Exit codes: 0 success, 1 usage error, 2 parse error, 3 verification or
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .analytic import cauchy_radius, has_dominant_root, mahler_bounds, mahler_measure
from .census import CensusConfig, CensusConfigError, CheckpointError, run_census
from .degeneracy import NotIrreducibleError, equivalence_stats, is_degenerate
from .families import FAMILY_BUILDERS, FamilyParameterError, verify_family
from .irreducibility import MAX_DEGREE, is_irreducible_q
from .oracles import asymptotic_targets, cubic_linear_family_count, d2_closed, i2_closed, r2_closed, r2star_closed
from .parsing import ParseError, parse_poly, recurrence_to_charpoly
from .records import records_to_csv, records_to_json

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_FAIL = 0, 1, 2, 3

POLY_HELP = 'polynomial, e.g. "X^4 - 2X^2 - 2" or "coeffs: 1,0,-2,0,-2" (descending, a_0 first)'


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _poly(text: str):
    return parse_poly(text)


def cmd_test(args) -> int:
    f = _poly(args.poly)
    rep = is_degenerate(f, args.order_mode)
    _emit({"polynomial": str(f), **rep.to_dict()})
    return EXIT_OK


def cmd_classes(args) -> int:
    f = _poly(args.poly)
    if f.deg is None or f.deg < 2:
        raise UsageError("class structure needs degree >= 2")
    if f.deg <= MAX_DEGREE and not is_irreducible_q(f):
        print(f"refused: {f} is reducible over Q; s and ell are defined for irreducible input only", file=sys.stderr)
        return EXIT_FAIL
    try:
        cs = equivalence_stats(f)
    except NotIrreducibleError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit({"polynomial": str(f), "s": cs.s, "ell": cs.ell})
    return EXIT_OK


def _dominant(v):
    return "uncertain" if v is None else v


def cmd_recurrence(args) -> int:
    try:
        a = [int(x) for x in args.coeffs.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"bad recurrence coefficients {args.coeffs!r}") from None
    try:
        f = recurrence_to_charpoly(a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = is_degenerate(f, args.order_mode)
    _emit({"polynomial": str(f), **rep.to_dict(), "has_dominant_root": _dominant(has_dominant_root(f))})
    return EXIT_OK


def _default_threads() -> int:
    raw = os.environ.get("DEGEN_THREADS")
    if raw is None:
        return 1
    try:
        t = int(raw)
    except ValueError:
        raise UsageError(f"DEGEN_THREADS must be a positive integer, got {raw!r}") from None
    if t < 1:
        raise UsageError(f"DEGEN_THREADS must be a positive integer, got {raw!r}")
    return t


def cmd_count(args) -> int:
    threads = args.threads if args.threads is not None else _default_threads()
    cfg = CensusConfig(
        n=args.degree, H_max=args.height, variant=args.variant, split=args.split,
        prefilter=not args.no_prefilter, order_mode=args.order_mode, threads=threads,
        checkpoint_path=args.checkpoint,
    )
    try:
        cfg.validate()
    except CensusConfigError as exc:
        raise UsageError(str(exc)) from None
    try:
        recs = run_census(cfg)
    except CheckpointError as exc:
        print(f"checkpoint error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    timing = not args.no_timing
    if args.out == "csv":
        sys.stdout.write(records_to_csv(recs, timing))
    else:
        sys.stdout.write(records_to_json(recs, cfg, __version__, timing))
    return EXIT_OK


def cmd_formulas(args) -> int:
    H = args.height
    if H < 1:
        raise UsageError("height must be >= 1")
    print(f"R2={r2_closed(H)}, I2={i2_closed(H)}, D2={d2_closed(H)}")
    print(f"R2*={r2star_closed(H)}")
    print(f"cubic_linear_family={cubic_linear_family_count(H)}")
    print()
    print("variant  n     quantity  normalizer   constant")
    for t in asymptotic_targets():
        n = str(t.n) if t.n is not None else f">={t.n_min}"
        const = "unknown" if t.constant is None else f"{t.constant} ({float(t.constant):.6f})"
        print(f"{t.variant:<8} {n:<5} {t.quantity:<9} {t.normalizer:<12} {const}")
    return EXIT_OK


def _family_spec(name: str, params: list[str]):
    if name not in FAMILY_BUILDERS:
        raise UsageError(f"unknown family {name!r}; choose from {sorted(FAMILY_BUILDERS)}")
    try:
        if name == "cyclo_times_poly":
            if len(params) != 1:
                raise UsageError("cyclo_times_poly takes one polynomial parameter")
            return FAMILY_BUILDERS[name](parse_poly(params[0]))
        if name == "quadratic":
            if len(params) != 2:
                raise UsageError("quadratic takes: KIND A")
            return FAMILY_BUILDERS[name](params[0], int(params[1]))
        ints = [int(p) for p in params]
        if name == "eisenstein_power":
            if len(ints) < 3:
                raise UsageError("eisenstein_power takes: M ELL B_1 .. B_M")
            return FAMILY_BUILDERS[name](ints[0], ints[1], ints[2:])
        if name == "eisenstein_power_general":
            if len(ints) < 4:
                raise UsageError("eisenstein_power_general takes: M ELL B_0 B_1 .. B_M")
            return FAMILY_BUILDERS[name](ints[0], ints[1], ints[2], ints[3:])
        return FAMILY_BUILDERS[name](*ints)
    except (FamilyParameterError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise UsageError(f"bad family parameters: {exc}") from None


def cmd_families(args) -> int:
    spec = _family_spec(args.name, args.params)
    rep = verify_family(spec)
    _emit(rep.to_dict())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    from .acceptance import run_all

    results = run_all(quick=args.quick, stream=sys.stdout)
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


def cmd_mahler(args) -> int:
    f = _poly(args.poly)
    try:
        lo, hi = mahler_bounds(f)
        m = mahler_measure(f)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({"polynomial": str(f), "mahler_measure": m, "lower": lo, "upper": hi})
    return EXIT_OK


def cmd_cauchy(args) -> int:
    f = _poly(args.poly)
    try:
        r = cauchy_radius(f)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({"polynomial": str(f), "cauchy_radius": r})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="degenpoly", description="Degenerate integer polynomials: tests, census and formulas.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def order_mode(sp):
        sp.add_argument("--order-mode", choices=("safe", "tight"), default="safe")

    sp = sub.add_parser("test", help="is the polynomial degenerate?")
    sp.add_argument("poly", help=POLY_HELP)
    order_mode(sp)
    sp.set_defaults(func=cmd_test)

    sp = sub.add_parser("classes", help="class structure (s, ell) of an irreducible polynomial")
    sp.add_argument("poly", help=POLY_HELP)
    sp.set_defaults(func=cmd_classes)

    sp = sub.add_parser("recurrence", help="test the characteristic polynomial of a_1,...,a_n")
    sp.add_argument("coeffs", help="comma-separated a_1,...,a_n with a_n != 0")
    order_mode(sp)
    sp.set_defaults(func=cmd_recurrence)

    sp = sub.add_parser("count", help="exhaustive census")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--height", type=int, required=True)
    sp.add_argument("--variant", choices=("monic", "general"), required=True)
    sp.add_argument("--split", action="store_true", help="also split into irreducible / reducible (n <= 4)")
    sp.add_argument("--no-prefilter", action="store_true")
    order_mode(sp)
    sp.add_argument("--threads", type=int, default=None, help="default: $DEGEN_THREADS or 1")
    sp.add_argument("--checkpoint", default=None, help="JSON-lines checkpoint file (resumed if present)")
    sp.add_argument("--out", choices=("csv", "json"), default="csv")
    sp.add_argument("--no-timing", action="store_true", help="leave wall_ms empty for reproducible output")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("formulas", help="closed-form counts and asymptotic targets")
    sp.add_argument("--height", type=int, required=True)
    sp.set_defaults(func=cmd_formulas)

    sp = sub.add_parser("families", help="generate and verify a construction family instance")
    sp.add_argument("--name", required=True, help=", ".join(sorted(FAMILY_BUILDERS)))
    sp.add_argument("--params", nargs="*", default=[], help="family parameters")
    sp.set_defaults(func=cmd_families)

    sp = sub.add_parser("verify", help="run the acceptance suite")
    sp.add_argument("--quick", action="store_true", help="smaller sizes, same thresholds")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("mahler", help="Mahler measure with enclosure")
    sp.add_argument("poly", help=POLY_HELP)
    sp.set_defaults(func=cmd_mahler)

    sp = sub.add_parser("cauchy", help="Cauchy root radius")
    sp.add_argument("poly", help=POLY_HELP)
    sp.set_defaults(func=cmd_cauchy)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
