"""Exact-arithmetic toolkit for Virasoro-type graded Lie algebras.

Everything computes over exact rationals: sparse multivariate polynomials,
structure-constant Lie brackets with window checks, intermediate-series
module checks, and the classification determinant with its case scan.
"""

__version__ = "0.1.0"

from .errors import ParameterError
from .poly import MultiPoly, Rational, canonical_string, det3, parse_poly, poly_divrem

__all__ = [
    "MultiPoly",
    "ParameterError",
    "Rational",
    "canonical_string",
    "det3",
    "parse_poly",
    "poly_divrem",
    "__version__",
]
