"""Transcribed reference data and a parser for its expression strings."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import sympy

from ..poly_core import LaurentPolynomial, RationalFunction, VariableTable

__all__ = ["load", "parse_laurent", "parse_rational", "from_sympy"]


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    text = resources.files(__name__).joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def from_sympy(expr: sympy.Expr, table: VariableTable) -> LaurentPolynomial:
    """A sympy expression that is a Laurent polynomial in the table's variables."""
    out = LaurentPolynomial.zero(table)
    for term in sympy.Add.make_args(sympy.expand(expr)):
        coeff, rest = term.as_coeff_Mul()
        if not coeff.is_Rational:
            raise ValueError(f"non-rational coefficient in {term}")
        exps: dict[str, int] = {}
        for base, e in rest.as_powers_dict().items():
            if base == 1:
                continue
            if not base.is_Symbol or not e.is_Integer:
                raise ValueError(f"not a Laurent monomial: {term}")
            exps[str(base)] = exps.get(str(base), 0) + int(e)
        out += LaurentPolynomial.monomial(table, exps, Fraction(int(coeff.p), int(coeff.q)))
    return out


def _sympify(text: str, table: VariableTable) -> sympy.Expr:
    local = {name: sympy.Symbol(name) for name in table.names}
    return sympy.sympify(text, locals=local)


def parse_rational(text: str, table: VariableTable) -> RationalFunction:
    num, den = sympy.fraction(sympy.cancel(_sympify(text, table)))
    return RationalFunction(from_sympy(num, table), from_sympy(den, table))


def parse_laurent(text: str, table: VariableTable) -> LaurentPolynomial:
    return parse_rational(text, table).to_laurent()
