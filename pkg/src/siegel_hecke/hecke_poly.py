"""The Hecke polynomial ∏_I (X − U_I) and its coefficients in the generators.

𝔥_i denotes the coefficient of X^i, so 𝔥_{2^g} = 1 and
𝔥_i = (−1)^i σ_{2^g−i}(U_I).  Coefficients are re-expressed as polynomials in
``tau_p, tau_p1, .., tau_p{g-1}`` using τ_{p,g} = 1, which on the Satake side
reads ∏U_iV_i = p^{g(g+1)/2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import qfield
from .poly_core import LaurentPolynomial, RationalFunction, VariableTable
from .satake import satake_tau_p, satake_tau_pi
from .weyl import SignedPermutation, act

__all__ = [
    "NotInSubringError",
    "HeckeConsistencyError",
    "HeckeExpression",
    "hecke_table",
    "tau_name",
    "hecke_roots",
    "root_subsets",
    "sigma_of_roots",
    "reduce_relation",
    "uniform_degree",
    "orbit_representative",
    "express_invariant",
    "hecke_polynomial",
    "hecke_coefficient_target",
    "satake_of",
]


class NotInSubringError(ValueError):
    """The polynomial is not in the image of the Hecke algebra."""


class HeckeConsistencyError(ArithmeticError):
    """A Hecke-polynomial identity failed to verify."""


def tau_name(i: int | None) -> str:
    """``tau_p`` for None, ``tau_p{i}`` otherwise."""
    return "tau_p" if i is None else f"tau_p{i}"


@lru_cache(maxsize=None)
def hecke_table(g: int) -> VariableTable:
    return VariableTable(("p", "tau_p") + tuple(tau_name(i) for i in range(1, g + 1)))


@lru_cache(maxsize=None)
def _tau_degrees(g: int) -> tuple[int, ...]:
    """Uniform U/V degree of each variable of the hecke table (p has none)."""
    return (0, 1) + (2,) * g


@dataclass(frozen=True)
class HeckeExpression:
    """Polynomial in τ_p, τ_{p,1..g} with p-Laurent coefficients."""

    g: int
    poly: LaurentPolynomial

    def __post_init__(self) -> None:
        if self.poly.table != hecke_table(self.g):
            object.__setattr__(self, "poly", self.poly.retable(hecke_table(self.g)))

    @classmethod
    def zero(cls, g: int) -> HeckeExpression:
        return cls(g, LaurentPolynomial.zero(hecke_table(g)))

    @classmethod
    def generator(cls, g: int, i: int | None) -> HeckeExpression:
        return cls(g, hecke_table(g).var(tau_name(i)))

    def __add__(self, other: HeckeExpression) -> HeckeExpression:
        return HeckeExpression(self.g, self.poly + other.poly)

    def __sub__(self, other: HeckeExpression) -> HeckeExpression:
        return HeckeExpression(self.g, self.poly - other.poly)

    def __neg__(self) -> HeckeExpression:
        return HeckeExpression(self.g, -self.poly)

    def __mul__(self, other: HeckeExpression | LaurentPolynomial | int | Fraction) -> HeckeExpression:
        if isinstance(other, HeckeExpression):
            return HeckeExpression(self.g, self.poly * other.poly)
        if isinstance(other, LaurentPolynomial):
            other = other.retable(hecke_table(self.g))
        return HeckeExpression(self.g, self.poly * other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeExpression):
            return NotImplemented
        return self.g == other.g and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.g, self.poly))

    def reduce(self) -> HeckeExpression:
        """Apply τ_{p,g} = 1."""
        return HeckeExpression(self.g, self.poly.subs({tau_name(self.g): 1}))

    def is_reduced(self) -> bool:
        return tau_name(self.g) not in self.poly.variables()

    def homogenize(self, degree: int) -> HeckeExpression:
        """Multiply each monomial by the power of τ_{p,g} making it of uniform degree ``degree``."""
        degs = _tau_degrees(self.g)
        gi = hecke_table(self.g).index(tau_name(self.g))
        out = {}
        for e, c in self.poly.terms.items():
            d = sum(k * w for k, w in zip(e, degs))
            if (degree - d) % 2:
                raise ValueError(f"monomial of degree {d} cannot be lifted to degree {degree}")
            ne = list(e)
            ne[gi] += (degree - d) // 2
            out[tuple(ne)] = c
        return HeckeExpression(self.g, LaurentPolynomial(hecke_table(self.g), out))

    def coefficient_map(self) -> dict[tuple[int, ...], LaurentPolynomial]:
        """τ-exponent vector ↦ p-coefficient."""
        return self.poly.collect(["p"])

    def __repr__(self) -> str:
        return f"HeckeExpression(g={self.g}, {self.poly!r})"


def satake_of(expr: HeckeExpression, convention: str = "product", reduce: bool = True) -> LaurentPolynomial:
    """Substitute Satake images for the τ symbols (and optionally reduce)."""
    g = expr.g
    table = VariableTable.standard(g)
    bindings = {"tau_p": satake_tau_p(g, table)}
    for i in range(1, g + 1):
        bindings[tau_name(i)] = satake_tau_pi(g, i, convention, table)
    out = expr.poly.subs(bindings, table)
    return reduce_relation(out, g) if reduce else out


# roots and their symmetric functions ----------------------------------------

def root_subsets(g: int) -> list[tuple[int, ...]]:
    """Subsets I of {1..g} in binary counting order (bit i-1 ↔ index i)."""
    return [tuple(i + 1 for i in range(g) if mask >> i & 1) for mask in range(1 << g)]


def hecke_roots(g: int, table: VariableTable | None = None) -> list[LaurentPolynomial]:
    """U_I = ∏_{i∈I}U_i ∏_{i∉I}V_i for all I."""
    if g < 1:
        raise ValueError("g must be at least 1")
    table = table or VariableTable.standard(g)
    return [
        LaurentPolynomial.monomial(table, {(f"U_{i}" if i in I else f"V_{i}"): 1 for i in range(1, g + 1)})
        for I in root_subsets(g)
    ]


@lru_cache(maxsize=None)
def _all_sigmas(g: int, table: VariableTable) -> tuple[LaurentPolynomial, ...]:
    sig = [LaurentPolynomial.constant(table, 1)]
    for r in hecke_roots(g, table):
        nxt = sig + [LaurentPolynomial.zero(table)]
        for i in range(len(sig), 0, -1):
            nxt[i] = nxt[i] + r * sig[i - 1]
        sig = nxt
    return tuple(sig)


def sigma_of_roots(g: int, i: int, table: VariableTable | None = None) -> LaurentPolynomial:
    """σ_i of the 2^g roots U_I."""
    if not 0 <= i <= 2 ** g:
        raise ValueError(f"i = {i} outside 0..{2 ** g}")
    return _all_sigmas(g, table or VariableTable.standard(g))[i]


# the relation ∏U_iV_i = p^{g(g+1)/2} -----------------------------------------

def _uv_slots(table: VariableTable, g: int) -> tuple[list[int], list[int]]:
    return (
        [table.index(f"U_{i}") for i in range(1, g + 1)],
        [table.index(f"V_{i}") for i in range(1, g + 1)],
    )


def reduce_relation(f: LaurentPolynomial, g: int) -> LaurentPolynomial:
    """Normal form modulo ∏U_iV_i = p^{g(g+1)/2}: divide each monomial by the
    largest power k (possibly negative) of ∏U_iV_i so that min_i min(a_i, b_i) = 0."""
    table = f.table
    u, v = _uv_slots(table, g)
    pi = table.index("p")
    n = g * (g + 1) // 2
    out: dict[tuple[int, ...], Fraction] = {}
    for e, c in f.terms.items():
        k = min(min(e[u[i]], e[v[i]]) for i in range(g))
        ne = list(e)
        if k:
            for i in range(g):
                ne[u[i]] -= k
                ne[v[i]] -= k
            ne[pi] += n * k
        key = tuple(ne)
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return LaurentPolynomial(table, out)


def uniform_degree(exp: tuple[int, ...], table: VariableTable, g: int) -> int | None:
    u, v = _uv_slots(table, g)
    degs = {exp[u[i]] + exp[v[i]] for i in range(g)}
    return degs.pop() if len(degs) == 1 else None


def orbit_representative(a: tuple[int, ...], K: int) -> tuple[int, ...]:
    """Canonical U-exponents in the Weyl orbit of U^a V^{K-a}."""
    return tuple(sorted(min(x, K - x) for x in a))


# solving for an expression in the generators --------------------------------

@lru_cache(maxsize=None)
def _tau_monomials(g: int, K: int) -> tuple[tuple[int, ...], ...]:
    """Exponents (a, e_1..e_{g-1}) with a + 2Σe ≤ K, a ≡ K (mod 2)."""
    out = []
    for a in range(K % 2, K + 1, 2):
        budget = (K - a) // 2
        for es in product(range(budget + 1), repeat=g - 1):
            if sum(es) <= budget:
                out.append((a,) + es)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _image_power(g: int, which: int | None, k: int, convention: str) -> LaurentPolynomial:
    table = VariableTable.standard(g)
    if k == 0:
        return LaurentPolynomial.constant(table, 1)
    if k > 1:
        return _image_power(g, which, k - 1, convention) * _image_power(g, which, 1, convention)
    return satake_tau_p(g, table) if which is None else satake_tau_pi(g, which, convention, table)


def _rep_coefficients(f: LaurentPolynomial, g: int, K: int) -> dict[tuple[int, ...], LaurentPolynomial]:
    """Coefficient (a p-polynomial) of each canonical orbit monomial of degree K."""
    others = [n for n in f.table.names if n != "p"]
    out = {}
    for outer, coeff in f.collect(["p"]).items():
        # outer lists exponents of every non-p variable in table order
        full = dict(zip(others, outer))
        a = tuple(full[f"U_{i}"] for i in range(1, g + 1))
        b = tuple(full[f"V_{i}"] for i in range(1, g + 1))
        if any(x + y != K for x, y in zip(a, b)):
            continue
        if a == orbit_representative(a, K):
            out[a] = coeff
    return out


@lru_cache(maxsize=None)
def _column(g: int, mono: tuple[int, ...], K: int, convention: str) -> tuple:
    a, es = mono[0], mono[1:]
    deg = a + 2 * sum(es)
    f = _image_power(g, None, a, convention)
    for i, e in enumerate(es, start=1):
        f = f * _image_power(g, i, e, convention)
    f = f * _image_power(g, g, (K - deg) // 2, convention)
    return tuple(sorted(_rep_coefficients(f, g, K).items()))


def _solve_degree(fk: LaurentPolynomial, g: int, K: int, convention: str) -> HeckeExpression | None:
    monos = _tau_monomials(g, K)
    cols = [dict(_column(g, m, K, convention)) for m in monos]
    target = _rep_coefficients(fk, g, K)
    rows = sorted(set(target).union(*[set(c) for c in cols]))

    def entry(d, r):
        x = d.get(r)
        return 0 if x is None else x.retable(qfield.P_TABLE)
    A = [[entry(c, r) for c in cols] for r in rows]
    b = [entry(target, r) for r in rows]
    sol = qfield.solve(A, b)
    if sol is None:
        return None
    table = hecke_table(g)
    expr = LaurentPolynomial.zero(table)
    for m, x in zip(monos, sol):
        if x == qfield.field_zero():
            continue
        coeff = qfield.from_field(x, table)
        if not coeff.is_laurent():
            raise NotInSubringError(f"coefficient {coeff} of τ-monomial {m} is not Laurent in p")
        exps = {"tau_p": m[0]}
        for i, e in enumerate(m[1:], start=1):
            exps[tau_name(i)] = e
        expr += coeff.to_laurent() * LaurentPolynomial.monomial(table, exps)
    return HeckeExpression(g, expr)


def _generators_invariant(f: LaurentPolynomial, g: int) -> bool:
    gens = [SignedPermutation.flip(g, [1])] + [SignedPermutation.transposition(g, i, i + 1) for i in range(1, g)]
    return all(act(w, f) == f for w in gens)


def express_invariant(
    f: LaurentPolynomial,
    g: int,
    convention: str = "product",
    max_lift: int = 4,
    check_invariant: bool = True,
) -> HeckeExpression:
    """Write an invariant f as a polynomial in τ_p, τ_{p,1..g-1} modulo τ_{p,g} = 1.

    f is split by uniform U/V degree K.  For each part an ansatz over all
    τ-monomials of degree ≤ K and parity K, each lifted to degree K by a
    power of S(τ_{p,g}), is matched against f on Weyl-orbit representatives
    and solved exactly over Q(p).  If no solution exists the part is
    multiplied by S(τ_{p,g}) (which is 1 in the quotient) and retried.
    """
    table = VariableTable.standard(g)
    if f.table != table:
        f = f.retable(table)
    if check_invariant and not _generators_invariant(f, g):
        raise NotInSubringError("polynomial is not Weyl-invariant")
    parts: dict[int, dict] = {}
    for e, c in f.terms.items():
        K = uniform_degree(e, table, g)
        if K is None:
            raise NotInSubringError(f"monomial {e} has no uniform U/V degree")
        parts.setdefault(K, {})[e] = c
    total = HeckeExpression.zero(g)
    lift = satake_tau_pi(g, g, convention, table)
    for K, terms in sorted(parts.items()):
        fk = LaurentPolynomial(table, terms)
        start = max(0, (-K + 1) // 2)
        fk = fk * lift ** start
        K += 2 * start
        for _ in range(max_lift + 1):
            sol = _solve_degree(fk, g, K, convention)
            if sol is not None:
                break
            fk = fk * lift
            K += 2
        else:
            raise NotInSubringError(f"no expression found for the degree-{K} part")
        total = total + sol
    return total


def hecke_coefficient_target(g: int, i: int, table: VariableTable | None = None) -> LaurentPolynomial:
    """(−1)^i σ_{2^g−i}(U_I), the coefficient of X^i in ∏(X − U_I)."""
    n = 2 ** g
    return sigma_of_roots(g, n - i, table) * (-1) ** i


@lru_cache(maxsize=None)
def hecke_polynomial(g: int, convention: str = "product", verify: bool = True) -> tuple[HeckeExpression, ...]:
    """(𝔥_0, .., 𝔥_{2^g}), 𝔥_i the coefficient of X^i.

    With ``verify`` each coefficient is substituted back and compared with
    (−1)^i σ_{2^g−i}(U_I) modulo the relation.
    """
    if g < 1:
        raise ValueError("g must be at least 1")
    out = []
    for i in range(2 ** g + 1):
        target = hecke_coefficient_target(g, i)
        h = express_invariant(target, g, convention, check_invariant=False)
        if verify and satake_of(h, convention) != reduce_relation(target, g):
            raise HeckeConsistencyError(f"h_{i} does not reproduce its symmetric function")
        out.append(h)
    return tuple(out)


def hecke_polynomial_in(g: int, var: str, convention: str = "product") -> LaurentPolynomial:
    """Σ 𝔥_i X^i over the table (p, τ.., var)."""
    base = hecke_table(g)
    table = base.extend(var)
    x = table.var(var)
    out = LaurentPolynomial.zero(table)
    for i, h in enumerate(hecke_polynomial(g, convention)):
        out += h.poly.retable(table) * x ** i
    return out


def rf_hecke(expr: HeckeExpression, table: VariableTable) -> RationalFunction:
    return RationalFunction(expr.poly.retable(table))
