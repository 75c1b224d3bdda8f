"""Satake images of τ_p and τ_{p,i}, rank counts R_g(i), and degree formulas.

Two readings of the double-sum formula for S(τ_{p,i}) are supported:

``"product"``
    Φ_jΦ_k is the literal product in the Hecke algebra of the torus.  This
    is the reading used by the displayed Satake images, the Hecke polynomial
    coefficients and the α values of the induced character.
``"spherical"``
    Φ_jΦ_k stands for the characteristic function of the double coset
    F_jF_k, i.e. the Hall–Littlewood polynomial P_{(2^j,1^{k-j})} at
    t = 1/p written back in Φ-products.  This is the reading under which the
    square identity (τ_p)² = Σ τ_{p,i}W_i(p) and the coset counts hold.

The two readings agree for i ≥ 1 when g ≤ 2, and for every i when g = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb

from . import qfield
from .poly_core import P_TABLE, LaurentPolynomial, RationalFunction, VariableTable

__all__ = [
    "CONVENTIONS",
    "RankCountError",
    "PhiElement",
    "phi",
    "rank_counts",
    "R",
    "brute_force_rank_counts",
    "interpolate_rank_counts",
    "gaussian_binomial_inv_p",
    "hl_coefficient",
    "satake_phi_expansion",
    "expand_phi_expansion",
    "satake_tau_p",
    "satake_tau_pi",
    "W",
    "degree_formulas",
    "degree_tau_p",
    "square_identity_check",
    "validate_rank_counts",
]

CONVENTIONS = ("product", "spherical")

PhiPair = tuple[int, int]
PhiExpansion = dict[PhiPair, LaurentPolynomial]


class RankCountError(ArithmeticError):
    """Rank-count polynomials disagree with a brute-force count."""


def _p(k: int, c: int | Fraction = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(P_TABLE, {"p": k}, c)


def _one() -> LaurentPolynomial:
    return LaurentPolynomial.constant(P_TABLE, 1)


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")


# Φ_i -----------------------------------------------------------------------

@dataclass(frozen=True)
class PhiElement:
    index: int
    expansion: LaurentPolynomial


def _table(g: int, table: VariableTable | None) -> VariableTable:
    return table if table is not None else VariableTable.standard(g)


@lru_cache(maxsize=None)
def _phi_poly(g: int, i: int, table: VariableTable) -> LaurentPolynomial:
    if not 0 <= i <= g:
        return LaurentPolynomial.zero(table)
    terms = {}
    u = [table.index(f"U_{k}") for k in range(1, g + 1)]
    v = [table.index(f"V_{k}") for k in range(1, g + 1)]
    for I in combinations(range(g), i):
        e = [0] * len(table)
        for k in range(g):
            e[u[k] if k in I else v[k]] = 1
        terms[tuple(e)] = 1
    return LaurentPolynomial(table, terms)


def phi(g: int, i: int, table: VariableTable | None = None) -> PhiElement:
    """Φ_i = Σ_{#I=i} U_I with U_I = ∏_{i∈I}U_i ∏_{i∉I}V_i."""
    if not 0 <= i <= g:
        raise ValueError(f"Φ index {i} outside 0..{g}")
    return PhiElement(i, _phi_poly(g, i, _table(g, table)))


# rank counts ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _symmetric_rank_counts(n: int) -> tuple[LaurentPolynomial, ...]:
    """N_n(r): symmetric n×n matrices of rank r over F_p, r = 0..n.

    Bordering an (n-1)-matrix A of rank s by a column v and corner a: if v is
    in the column space of A (p^s choices) the rank is s for one value of a
    and s+1 for the other p-1; otherwise (p^{n-1}-p^s choices) it is s+2.
    """
    if n == 0:
        return (_one(),)
    prev = _symmetric_rank_counts(n - 1)
    p1 = _p(1)
    out = []
    for r in range(n + 1):
        total = LaurentPolynomial.zero(P_TABLE)
        if r <= n - 1:
            total += prev[r] * _p(r)
        if 0 <= r - 1 <= n - 1:
            total += prev[r - 1] * _p(r - 1) * (p1 - 1)
        if 0 <= r - 2 <= n - 1:
            total += prev[r - 2] * (_p(n - 1) - _p(r - 2)) * p1
        out.append(total)
    return tuple(out)


@lru_cache(maxsize=None)
def rank_counts(g: int) -> tuple[LaurentPolynomial, ...]:
    """(R_g(0), .., R_g(g)): symmetric g×g matrices over F_p of corank exactly i."""
    if g < 0:
        raise ValueError("g must be nonnegative")
    n = _symmetric_rank_counts(g)
    row = tuple(n[g - i] for i in range(g + 1))
    if row[g] != 1 or (g >= 1 and row[g - 1] != _p(g) - 1):
        raise RankCountError(f"closed facts R_g(g)=1, R_g(g-1)=p^g-1 fail at g={g}")
    total = sum(row, LaurentPolynomial.zero(P_TABLE))
    if total != _p(g * (g + 1) // 2):
        raise RankCountError(f"row sum of R_{g} is not p^{g * (g + 1) // 2}")
    return row


def R(n: int, i: int) -> LaurentPolynomial:
    """R_n(i), zero outside 0 ≤ i ≤ n."""
    if n < 0 or not 0 <= i <= n:
        return LaurentPolynomial.zero(P_TABLE)
    return rank_counts(n)[i]


def _rank_mod(rows: list[list[int]], q: int) -> int:
    m = [r[:] for r in rows]
    n = len(m)
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, n) if m[i][col] % q), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, q)
        for i in range(n):
            if i != rank and m[i][col] % q:
                f = m[i][col] * inv % q
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def brute_force_rank_counts(g: int, q: int) -> tuple[int, ...]:
    """Count symmetric g×g matrices over F_q by corank, by full enumeration."""
    slots = [(i, j) for i in range(g) for j in range(i, g)]
    counts = [0] * (g + 1)
    for vals in product(range(q), repeat=len(slots)):
        m = [[0] * g for _ in range(g)]
        for (i, j), x in zip(slots, vals):
            m[i][j] = m[j][i] = x
        counts[g - _rank_mod(m, q)] += 1
    return tuple(counts)


_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def interpolate_rank_counts(g: int, primes: tuple[int, ...] | None = None) -> tuple[LaurentPolynomial, ...]:
    """Lagrange interpolation of brute-force counts (feasible only for tiny g).

    Uses degree bound g(g+1)/2, hence g(g+1)/2 + 1 primes; any extra primes
    supplied are used as consistency checks.
    """
    need = g * (g + 1) // 2 + 1
    primes = primes or _PRIMES[:need]
    if len(primes) < need:
        raise ValueError(f"need at least {need} primes")
    data = {q: brute_force_rank_counts(g, q) for q in primes}
    pts = primes[:need]
    x = _p(1)
    out = []
    for i in range(g + 1):
        poly = LaurentPolynomial.zero(P_TABLE)
        for a in pts:
            basis = LaurentPolynomial.constant(P_TABLE, data[a][i])
            for b in pts:
                if b != a:
                    basis = basis * (x - b) * Fraction(1, a - b)
            poly += basis
        for q in primes[need:]:
            if poly.evaluate({"p": q}) != data[q][i]:
                raise RankCountError(f"interpolated R_{g}({i}) disagrees with the count at q={q}")
        out.append(poly)
    return tuple(out)


# Hall–Littlewood correction ----------------------------------------------

@lru_cache(maxsize=None)
def gaussian_binomial_inv_p(n: int, r: int) -> LaurentPolynomial:
    """Gaussian binomial [n, r]_t at t = 1/p (a polynomial in 1/p)."""
    if r < 0 or r > n:
        return LaurentPolynomial.zero(P_TABLE)
    if r == 0 or r == n:
        return _one()
    return gaussian_binomial_inv_p(n - 1, r - 1) + _p(-r) * gaussian_binomial_inv_p(n - 1, r)


@lru_cache(maxsize=None)
def hl_coefficient(b: int, r: int) -> LaurentPolynomial:
    """c_r(b) with P_{(2^j,1^b)} = Σ_r c_r(b) e_{j-r} e_{j+b+r} (Hall–Littlewood, t = 1/p).

    From e_j e_{j+b} = Σ_s [b+2s, s]_t P_{(2^{j-s},1^{b+2s})}.
    """
    if r == 0:
        return _one()
    total = LaurentPolynomial.zero(P_TABLE)
    for s in range(1, r + 1):
        total -= gaussian_binomial_inv_p(b + 2 * s, s) * hl_coefficient(b + 2 * s, r - s)
    return total


# Satake images in the Φ basis ---------------------------------------------

def _add_into(target: PhiExpansion, key: PhiPair, c: LaurentPolynomial) -> None:
    s = target.get(key, LaurentPolynomial.zero(P_TABLE)) + c
    if s.is_zero():
        target.pop(key, None)
    else:
        target[key] = s


@lru_cache(maxsize=None)
def _phi_expansion(g: int, i: int, convention: str) -> tuple[tuple[PhiPair, LaurentPolynomial], ...]:
    out: PhiExpansion = {}
    for j in range(g + 1):
        for k in range(j + i, g + 1):
            coeff = R(k - j, i) * _p(-comb(k - j + 1, 2))
            if coeff.is_zero():
                continue
            if convention == "product":
                _add_into(out, (j, k), coeff)
                continue
            b = k - j
            for r in range(j + 1):
                lo, hi = j - r, k + r
                if hi > g:
                    break
                _add_into(out, (lo, hi), coeff * hl_coefficient(b, r))
    return tuple(sorted(out.items()))


def satake_phi_expansion(g: int, i: int, convention: str = "product") -> PhiExpansion:
    """S(τ_{p,i}) as {(j, k): coefficient of Φ_jΦ_k}, j ≤ k, coefficients in p.

    i = 0 is the extended convention (same double sum, no lower bound on k-j).
    """
    _check_convention(convention)
    if not 0 <= i <= g:
        raise ValueError(f"generator index {i} outside 0..{g}")
    return dict(_phi_expansion(g, i, convention))


def expand_phi_expansion(expansion: PhiExpansion, g: int, table: VariableTable | None = None) -> LaurentPolynomial:
    """Expand Σ c_{jk} Φ_jΦ_k in the U/V ring."""
    table = _table(g, table)
    total = LaurentPolynomial.zero(table)
    for (j, k), c in expansion.items():
        total += c.retable(table) * _phi_poly(g, j, table) * _phi_poly(g, k, table)
    return total


@lru_cache(maxsize=None)
def _tau_pi(g: int, i: int, convention: str, table: VariableTable) -> LaurentPolynomial:
    return expand_phi_expansion(satake_phi_expansion(g, i, convention), g, table)


def satake_tau_pi(g: int, i: int, convention: str = "product", table: VariableTable | None = None) -> LaurentPolynomial:
    """S(τ_{p,i}) = Σ_{j+i ≤ k} R_{k-j}(i) p^{-C(k-j+1,2)} Φ_jΦ_k, expanded in U/V."""
    _check_convention(convention)
    if not 0 <= i <= g:
        raise ValueError(f"generator index {i} outside 0..{g}")
    return _tau_pi(g, i, convention, _table(g, table))


@lru_cache(maxsize=None)
def _tau_p(g: int, table: VariableTable) -> LaurentPolynomial:
    total = sum((_phi_poly(g, i, table) for i in range(g + 1)), LaurentPolynomial.zero(table))
    prod = LaurentPolynomial.constant(table, 1)
    for k in range(1, g + 1):
        prod *= table.var(f"U_{k}") + table.var(f"V_{k}")
    assert total == prod, "Σ Φ_i must equal ∏(U_i + V_i)"
    return total


def satake_tau_p(g: int, table: VariableTable | None = None) -> LaurentPolynomial:
    """S(τ_p) = Φ_0 + .. + Φ_g = ∏(U_i + V_i)."""
    if g < 1:
        raise ValueError("g must be at least 1")
    return _tau_p(g, _table(g, table))


# degrees -----------------------------------------------------------------

@lru_cache(maxsize=None)
def W(n: int) -> LaurentPolynomial:
    """W_n(p) = ∏_{i=1}^n (p^i + 1)."""
    out = _one()
    for i in range(1, n + 1):
        out *= _p(i) + 1
    return out


def degree_tau_p(g: int) -> LaurentPolynomial:
    return W(g)


@lru_cache(maxsize=None)
def degree_formulas(g: int, k: int) -> LaurentPolynomial:
    """deg τ_{p,k} = p^{(g-k)(g-k+1)/2} W_g/W_k ∏_{j<k}(p^{g-j}-1) / ∏_{j=1}^k (p^j-1)."""
    if not 0 <= k <= g:
        raise ValueError(f"k = {k} outside 0..{g}")
    num = _p((g - k) * (g - k + 1) // 2) * W(g)
    den = W(k)
    for j in range(k):
        num *= _p(g - j) - 1
        den *= _p(j + 1) - 1
    return qfield.from_field_laurent(qfield.to_field(RationalFunction(num, den)))


def square_identity_check(g: int, convention: str = "spherical") -> bool:
    """(τ_p)² = Σ_{i=0}^g τ_{p,i} W_i(p) in the Satake image."""
    lhs = satake_tau_p(g) ** 2
    rhs = LaurentPolynomial.zero(lhs.table)
    for i in range(g + 1):
        rhs += satake_tau_pi(g, i, convention) * W(i).retable(lhs.table)
    return lhs == rhs


def validate_rank_counts(g: int, primes: tuple[int, ...] = (2, 3)) -> None:
    """Compare R_g(i) at q with brute-force counts over F_q; raises on mismatch."""
    for q in primes:
        counts = brute_force_rank_counts(g, q)
        for i, r in enumerate(rank_counts(g)):
            if r.evaluate({"p": q}) != counts[i]:
                raise RankCountError(f"R_{g}({i}) at q={q} is {r.evaluate({'p': q})}, count is {counts[i]}")
