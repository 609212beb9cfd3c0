"""Exact analysis of singular plane sextics of torus type.

A sextic of torus type is defined by f2(x,y)^3 + f3(x,y)^2 with deg f2 = 2
and deg f3 = 3. This package classifies its singularities exactly (over Q
and number-field towers), computes the classical invariants, decomposes the
curve into components, and verifies a built-in classification catalog and
example corpus.
"""

__version__ = "0.1.0"

from .analysis import CurveAnalysis, analyze_curve
from .poly import Poly, UniPoly, parse_poly, format_poly
from .torus import TorusPair

__all__ = [
    "CurveAnalysis",
    "Poly",
    "TorusPair",
    "UniPoly",
    "analyze_curve",
    "format_poly",
    "parse_poly",
    "__version__",
]
