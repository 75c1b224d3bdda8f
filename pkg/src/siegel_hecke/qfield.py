"""Exact linear algebra over Q(p), delegated to sympy's DomainMatrix.

Entries are taken from :class:`LaurentPolynomial` / :class:`RationalFunction`
objects that mention only the variable ``p``; results come back the same way.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from sympy import QQ, Symbol
from sympy.polys.matrices import DomainMatrix

from .poly_core import P_TABLE, LaurentPolynomial, RationalFunction, VariableTable

_K = QQ.frac_field(Symbol("p"))
_F = _K.field
_R = _F.ring

Entry = Union[LaurentPolynomial, RationalFunction, int, Fraction]


def _poly_to_ring(f: LaurentPolynomial) -> tuple:
    """Split a p-Laurent polynomial into (ring polynomial, p-shift)."""
    if f.table != P_TABLE:
        if set(f.variables()) - {"p"}:
            raise ValueError(f"entry mentions variables other than p: {f.variables()}")
        f = f.retable(P_TABLE)
    if f.is_zero():
        return _R.zero, 0
    lo = f.min_exponents()[0]
    d = {(e[0] - lo,): QQ(c.numerator, c.denominator) for e, c in f.terms.items()}
    return _R.from_dict(d), lo


def to_field(x: Entry):
    """Element of Q(p) from a p-only Laurent polynomial or rational function."""
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return _F(QQ(x.numerator, x.denominator))
    if isinstance(x, LaurentPolynomial):
        x = RationalFunction(x)
    num, ln = _poly_to_ring(x.num)
    den, ld = _poly_to_ring(x.den)
    shift = ln - ld
    if shift > 0:
        num = num * _R.gens[0] ** shift
    elif shift < 0:
        den = den * _R.gens[0] ** (-shift)
    return _F.new(num, den)


def _ring_to_poly(r, table: VariableTable) -> LaurentPolynomial:
    idx = table.index("p")
    n = len(table)
    terms = {}
    for (k,), c in r.to_dict().items():
        e = [0] * n
        e[idx] = k
        terms[tuple(e)] = Fraction(int(c.numerator), int(c.denominator))
    return LaurentPolynomial(table, terms)


def from_field(e, table: VariableTable = P_TABLE) -> RationalFunction:
    return RationalFunction(_ring_to_poly(e.numer, table), _ring_to_poly(e.denom, table))


def from_field_laurent(e, table: VariableTable = P_TABLE) -> LaurentPolynomial:
    """Like :func:`from_field` but insists on a Laurent result."""
    return from_field(e, table).to_laurent()


def _matrix(rows: Sequence[Sequence[Entry]], ncols: int | None = None) -> DomainMatrix:
    rows = [[to_field(x) for x in row] for row in rows]
    m = len(rows)
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return DomainMatrix(rows, (m, n), _K)


def rank(rows: Sequence[Sequence[Entry]]) -> int:
    if not rows:
        return 0
    return _matrix(rows).rank()


def nullspace(rows: Sequence[Sequence[Entry]], ncols: int) -> list[list]:
    """Basis of the right kernel, as lists of Q(p) field elements."""
    if not rows:
        return [[_F.one if i == j else _F.zero for i in range(ncols)] for j in range(ncols)]
    ns = _matrix(rows, ncols).nullspace()
    return [list(row) for row in ns.to_list()] if ns.shape[0] else []


def solve(rows: Sequence[Sequence[Entry]], rhs: Sequence[Entry]) -> list | None:
    """One solution of ``A x = b`` (free variables set to 0), or None if inconsistent."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m = _matrix(aug, n + 1)
    rref, pivots = m.rref()
    if n in pivots:
        return None
    sol = [_F.zero] * n
    data = rref.to_list()
    for r, c in enumerate(pivots):
        sol[c] = data[r][n] / data[r][c]
    return sol


def field_zero():
    return _F.zero


def field_one():
    return _F.one


def p_field():
    return _F.gens[0]


def clear_denominators(elems: Sequence) -> list[LaurentPolynomial]:
    """Multiply Q(p) elements by the lcm of their denominators; returns p-polynomials."""
    den = _R.one
    for e in elems:
        den = den.lcm(e.denom)
    out = []
    for e in elems:
        num = e.numer * den.exquo(e.denom)
        out.append(_ring_to_poly(num, P_TABLE))
    return out
