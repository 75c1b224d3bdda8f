"""The character map α_G(χ), coset-count coefficients C(𝔡,k) and C̃(𝔡,k).

α values live in the ring over ``p, b_1..b_g, a0sq`` where ``a0sq`` stands
for a_0².  A value of odd a_0-degree carries one extra factor a_0, recorded by
the ``odd`` flag of :class:`AlphaValue`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb

from .poly_core import P_TABLE, LaurentPolynomial, VariableTable
from .satake import CONVENTIONS, R, hl_coefficient, satake_phi_expansion

__all__ = [
    "AlphaError",
    "AlphaValue",
    "alpha_table",
    "b_sigma",
    "alpha_map",
    "gl_alpha",
    "gl_coset_representatives",
    "gl_alpha_brute_force",
    "alpha_tau_p",
    "alpha_tau_pi",
    "tilde_c",
    "tilde_c_q1",
    "c_count",
    "digit_vectors",
    "alpha_via_digit_sum",
    "degree_sum",
]


class AlphaError(ValueError):
    """α cannot be applied, or two α computations disagree."""


@lru_cache(maxsize=None)
def alpha_table(g: int, aux: tuple[str, ...] = ()) -> VariableTable:
    return VariableTable(("p",) + tuple(f"b_{i}" for i in range(1, g + 1)) + ("a0sq",) + tuple(aux))


@dataclass(frozen=True)
class AlphaValue:
    """``poly · a_0^odd`` with a_0² written as ``a0sq`` inside ``poly``."""

    poly: LaurentPolynomial
    odd: bool = False

    def __add__(self, other: AlphaValue) -> AlphaValue:
        if self.odd != other.odd:
            raise AlphaError("cannot add α values of different a_0 parity")
        return AlphaValue(self.poly + other.poly, self.odd)

    def __sub__(self, other: AlphaValue) -> AlphaValue:
        return self + AlphaValue(-other.poly, other.odd)

    def __mul__(self, other: AlphaValue | LaurentPolynomial | int | Fraction) -> AlphaValue:
        if isinstance(other, AlphaValue):
            poly = self.poly * other.poly
            if self.odd and other.odd:
                poly = poly * self.poly.table.var("a0sq")
            return AlphaValue(poly, self.odd != other.odd)
        return AlphaValue(self.poly * other, self.odd)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> AlphaValue:
        out = AlphaValue(LaurentPolynomial.constant(self.poly.table, 1))
        for _ in range(n):
            out = out * self
        return out

    def squared(self) -> LaurentPolynomial:
        """The square, which always has even a_0-degree."""
        sq = self * self
        return sq.poly

    def with_a0(self, table: VariableTable | None = None) -> LaurentPolynomial:
        """Rewrite over a table with an explicit ``a0`` (a0sq ↦ a0²)."""
        src = self.poly.table
        if table is None:
            table = VariableTable(tuple(n for n in src.names if n != "a0sq") + ("a0",))
        a0 = table.var("a0")
        out = self.poly.subs({"a0sq": a0 * a0}, table)
        return out * a0 if self.odd else out


@lru_cache(maxsize=None)
def b_sigma(g: int, i: int, table: VariableTable | None = None) -> LaurentPolynomial:
    """σ_i(b_1..b_g)."""
    table = table or alpha_table(g)
    if not 0 <= i <= g:
        return LaurentPolynomial.zero(table)
    terms = {}
    idx = [table.index(f"b_{k}") for k in range(1, g + 1)]
    for I in combinations(idx, i):
        e = [0] * len(table)
        for j in I:
            e[j] = 1
        terms[tuple(e)] = 1
    return LaurentPolynomial(table, terms)


def alpha_map(f: LaurentPolynomial, g: int, table: VariableTable | None = None) -> AlphaValue:
    """α_T(χ): U_i ↦ a_0^{1/g} b_i, V_i ↦ a_0^{1/g}.

    Every monomial must have the same total degree K in each pair (U_i, V_i),
    so that its image is a_0^K b^a with no fractional power; K may vary from
    term to term as long as its parity does not.
    """
    table = table or alpha_table(g)
    src = f.table
    u = [src.index(f"U_{i}") for i in range(1, g + 1)]
    v = [src.index(f"V_{i}") for i in range(1, g + 1)]
    b = [table.index(f"b_{i}") for i in range(1, g + 1)]
    a0 = table.index("a0sq")
    carry = {}
    for i, name in enumerate(src.names):
        if i in u or i in v:
            continue
        carry[i] = table.index(name) if name in table else None
    parity = None
    terms: dict[tuple[int, ...], Fraction] = {}
    for e, c in f.terms.items():
        degs = {e[u[i]] + e[v[i]] for i in range(g)}
        if len(degs) != 1:
            raise AlphaError(f"monomial {e} is not of uniform U/V degree; α would need a_0^(1/g)")
        (K,) = degs
        if parity is None:
            parity = K % 2
        elif parity != K % 2:
            raise AlphaError("mixed a_0 parity in one polynomial")
        ne = [0] * len(table)
        for i in range(g):
            ne[b[i]] = e[u[i]]
        ne[a0] += K // 2
        for i, j in carry.items():
            if e[i]:
                if j is None:
                    raise AlphaError(f"variable {src.names[i]!r} has no image")
                ne[j] += e[i]
        key = tuple(ne)
        terms[key] = terms.get(key, 0) + c
    return AlphaValue(LaurentPolynomial(table, terms), bool(parity))


# GL_n warm-up ----------------------------------------------------------------

def _p(k: int, table: VariableTable = P_TABLE) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(table, {"p": k})


def gl_alpha(n: int, i: int, table: VariableTable | None = None) -> LaurentPolynomial:
    """α_G(χ)(T_{p,n-i}) = p^{-i(i+1)/2} σ_i(b) for G = GL_n."""
    if not 0 <= i <= n:
        raise ValueError(f"i = {i} outside 0..{n}")
    table = table or alpha_table(n)
    return _p(-i * (i + 1) // 2, table) * b_sigma(n, i, table)


def gl_coset_representatives(n: int, i: int, q: int) -> list[tuple[tuple[int, ...], list[list[int]]]]:
    """(I, γ_{I,c}) for all I of size i and all c_{jk} ∈ {0..q-1}, j ∉ I, k ∈ I, j < k.

    γ has q on the diagonal at I, 1 elsewhere, and c_{jk} at position (k, j).
    """
    out = []
    for I in combinations(range(1, n + 1), i):
        slots = [(j, k) for j in range(1, n + 1) for k in I if j not in I and j < k]
        for cs in product(range(q), repeat=len(slots)):
            m = [[0] * n for _ in range(n)]
            for j in range(1, n + 1):
                m[j - 1][j - 1] = q if j in I else 1
            for (j, k), c in zip(slots, cs):
                m[k - 1][j - 1] = c
            out.append((I, m))
    return out


def _valuation(x: Fraction, q: int) -> float:
    if x == 0:
        return float("inf")
    v = 0
    num, den = x.numerator, x.denominator
    while num % q == 0:
        num //= q
        v += 1
    while den % q == 0:
        den //= q
        v -= 1
    return v


def _det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    a = [row[:] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def _inverse(m: list[list[int]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def _in_gl_zq(m: list[list[Fraction]], q: int) -> bool:
    if any(_valuation(x, q) < 0 for row in m for x in row):
        return False
    return _valuation(_det(m), q) == 0


def _elementary_divisor_exponents(m: list[list[int]], q: int) -> list[int]:
    """q-adic valuations of the elementary divisors, from gcds of minors."""
    n = len(m)
    fm = [[Fraction(x) for x in row] for row in m]
    prev = 0
    out = []
    for k in range(1, n + 1):
        best = min(
            _valuation(_det([[fm[r][c] for c in cols] for r in rows]), q)
            for rows in combinations(range(n), k)
            for cols in combinations(range(n), k)
        )
        out.append(int(best - prev))
        prev = best
    return out


def gl_alpha_brute_force(n: int, i: int, q: int, check: bool = True) -> LaurentPolynomial:
    """α(T_{p,n-i}) at p = q summed over explicit coset representatives.

    Each γ_{I,c} contributes χ(qγ^{-t}); the coset representatives of the
    dual double coset have diagonal 1 at I, so the character value is
    ∏_{k∈I} a_k with a_k = q^{-k} b_k.  With ``check`` the representatives
    are confirmed to lie in the double coset of diag(1^{n-i}, q^i) and to
    give pairwise distinct cosets γ·GL_n(Z_q).
    """
    table = alpha_table(n)
    reps = gl_coset_representatives(n, i, q)
    if check:
        target = [0] * (n - i) + [1] * i
        for _, m in reps:
            if _elementary_divisor_exponents(m, q) != target:
                raise AlphaError(f"{m} is not in the double coset of T_(p,{i})")
        invs = [_inverse(m) for _, m in reps]
        for a in range(len(reps)):
            for b in range(a + 1, len(reps)):
                prod_ab = [
                    [sum(invs[a][r][t] * reps[b][1][t][c] for t in range(n)) for c in range(n)]
                    for r in range(n)
                ]
                if _in_gl_zq(prod_ab, q):
                    raise AlphaError("two representatives define the same coset")
    total = LaurentPolynomial.zero(table)
    for I, _ in reps:
        exps = {f"b_{k}": 1 for k in I}
        total += LaurentPolynomial.monomial(table, exps, Fraction(1, q ** sum(I)))
    return total


# GSp_2g ----------------------------------------------------------------------

def alpha_tau_p(g: int) -> AlphaValue:
    """α(τ_p) = a_0 ∏(1 + b_i)."""
    table = alpha_table(g)
    out = LaurentPolynomial.constant(table, 1)
    for i in range(1, g + 1):
        out *= table.var(f"b_{i}") + 1
    return AlphaValue(out, True)


@lru_cache(maxsize=None)
def alpha_tau_pi(g: int, i: int, convention: str = "product") -> AlphaValue:
    """α(τ_{p,i}) = a_0² Σ R_{k-j}(i) p^{-C(k-j+1,2)} σ_j(b) σ_k(b) (i = 0 extended)."""
    table = alpha_table(g)
    out = LaurentPolynomial.zero(table)
    for (j, k), c in satake_phi_expansion(g, i, convention).items():
        out += c.retable(table) * b_sigma(g, j) * b_sigma(g, k)
    return AlphaValue(out * table.var("a0sq"), False)


@lru_cache(maxsize=None)
def tilde_c_q1(q1: int, k: int, convention: str = "product") -> LaurentPolynomial:
    """C̃ as a function of the number of ones q_1 and k.

    Σ_{j : q_1-2j ≥ k} R_{q_1-2j}(k) p^{-C(q_1-2j+1,2)} w_j with w_j = C(q_1, j)
    for the product reading and w_j = Σ_r c_r(q_1-2j) C(q_1, j-r) for the
    spherical one.  The j with q_1 = 2j only contributes at k = 0.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    out = LaurentPolynomial.zero(P_TABLE)
    for j in range(q1 // 2 + 1):
        b = q1 - 2 * j
        if b < k:
            continue
        if convention == "product":
            w = LaurentPolynomial.constant(P_TABLE, comb(q1, j))
        else:
            w = sum(
                (hl_coefficient(b, r) * comb(q1, j - r) for r in range(j + 1)),
                LaurentPolynomial.zero(P_TABLE),
            )
        out += R(b, k) * _p(-comb(b + 1, 2)) * w
    return out


def tilde_c(d: tuple[int, ...], k: int, convention: str = "product") -> LaurentPolynomial:
    if any(x not in (0, 1, 2) for x in d):
        raise ValueError(f"digit vector {d} has entries outside {{0,1,2}}")
    if not 0 <= k <= len(d):
        raise ValueError(f"k = {k} outside 0..{len(d)}")
    return tilde_c_q1(sum(1 for x in d if x == 1), k, convention)


def c_count(d: tuple[int, ...], k: int, convention: str = "product") -> LaurentPolynomial:
    """C(𝔡,k) = C̃(𝔡,k) p^{Σ i d_i}."""
    return tilde_c(d, k, convention) * _p(sum(i * x for i, x in enumerate(d, start=1)))


def digit_vectors(g: int) -> list[tuple[int, ...]]:
    return list(product((0, 1, 2), repeat=g))


def alpha_via_digit_sum(g: int, k: int, convention: str = "product") -> AlphaValue:
    """a_0² Σ_𝔡 C̃(𝔡,k) ∏ b_i^{d_i}; the a_0² factor is made explicit."""
    table = alpha_table(g)
    terms = {}
    for d in digit_vectors(g):
        c = tilde_c(d, k, convention)
        for (pe,), coeff in c.terms.items():
            e = [0] * len(table)
            e[0] = pe
            for i, x in enumerate(d, start=1):
                e[i] = x
            e[table.index("a0sq")] = 1
            terms[tuple(e)] = coeff
    return AlphaValue(LaurentPolynomial(table, terms), False)


def degree_sum(g: int, k: int, convention: str = "product") -> LaurentPolynomial:
    """Σ_𝔡 C(𝔡,k), the number of cosets in the double coset of T_{p,k}."""
    total = LaurentPolynomial.zero(P_TABLE)
    for d in digit_vectors(g):
        total += c_count(d, k, convention)
    return total
