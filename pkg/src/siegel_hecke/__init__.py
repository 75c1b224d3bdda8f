"""Explicit Satake maps, Hecke polynomials and eigenvalue relations for GSp_2g."""

from .poly_core import LaurentPolynomial, RationalFunction, VariableTable

__version__ = "0.1.0"

__all__ = ["LaurentPolynomial", "RationalFunction", "VariableTable", "__version__"]
