"""Degenerate integer polynomials: exact tests, census and closed-form counts."""

__version__ = "0.1.0"

from .polycore import IntPoly  # noqa: E402
from .parsing import parse_poly, render  # noqa: E402
from .degeneracy import DegeneracyReport, ClassStructure, is_degenerate, fast_witness, equivalence_stats  # noqa: E402

__all__ = [
    "IntPoly",
    "parse_poly",
    "render",
    "DegeneracyReport",
    "ClassStructure",
    "is_degenerate",
    "fast_witness",
    "equivalence_stats",
]
