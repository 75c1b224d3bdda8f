"""Human-readable renderings: LaTeX for polynomials, Φ-basis lines, Hecke blocks."""

from __future__ import annotations

import re
from fractions import Fraction

from .poly_core import LaurentPolynomial, RationalFunction

__all__ = ["latex_name", "latex", "latex_rational", "latex_phi_expansion", "latex_hecke_block"]

_TAU = re.compile(r"^tau_p(\d+)$")
_SUB = re.compile(r"^([A-Za-z']+)_(\d+)$")


def latex_name(name: str) -> str:
    if name == "tau_p":
        return r"\tau_p"
    if m := _TAU.match(name):
        return rf"\tau_{{p,{m.group(1)}}}"
    if name == "a0":
        return "a_0"
    if name == "a0sq":
        return "a_0^2"
    if name == "lambda'":
        return r"\lambda'"
    if m := _SUB.match(name):
        return f"{m.group(1)}_{{{m.group(2)}}}"
    return name


def _monomial(names: tuple[str, ...], exps: tuple[int, ...]) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 0:
            continue
        base = latex_name(name)
        parts.append(base if e == 1 else f"{base}^{{{e}}}")
    return " ".join(parts)


def _coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(abs(c.numerator))
    return rf"\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def latex(f: LaurentPolynomial) -> str:
    """Terms in descending exponent order; signs folded into the joins."""
    if f.is_zero():
        return "0"
    out = []
    for e, c in sorted(f.terms.items(), reverse=True):
        mono = _monomial(f.table.names, e)
        mag = _coeff(c)
        if mono:
            body = mono if abs(c) == 1 else f"{mag} {mono}"
        else:
            body = mag
        sign = "-" if c < 0 else "+"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def latex_rational(f: RationalFunction) -> str:
    if f.den == 1:
        return latex(f.num)
    return rf"\frac{{{latex(f.num)}}}{{{latex(f.den)}}}"


def latex_phi_expansion(name: str, expansion: dict[tuple[int, int], LaurentPolynomial] | dict[int, LaurentPolynomial]) -> str:
    """``\\tilde\\tau_{p,i} = Σ c Φ_j Φ_k`` with one summand per key."""
    terms = []
    for key in sorted(expansion):
        c = expansion[key]
        phis = " ".join(rf"\Phi_{{{j}}}" for j in (key if isinstance(key, tuple) else (key,)))
        coeff = latex(c)
        terms.append(phis if coeff == "1" else rf"\left({coeff}\right) {phis}")
    lhs = r"\tilde " + latex_name(name)
    return f"{lhs} = " + " + ".join(terms)


def latex_hecke_block(coefficients: list[LaurentPolynomial]) -> str:
    """One line per coefficient, ``\\goth h_i = ...``."""
    return "\n".join(rf"\goth h_{{{i}}} = {latex(h)}" for i, h in enumerate(coefficients))
