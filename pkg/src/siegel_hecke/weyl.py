"""The type C_g Weyl group as signed permutations acting on U_i, V_i."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable

from .poly_core import LaurentPolynomial, VariableTable

__all__ = [
    "UnsupportedVariableError",
    "SignedPermutation",
    "group_elements",
    "act",
    "is_invariant",
    "is_invariant_sg",
    "orbit_sum",
    "length_sign_vector",
    "length_min_rep",
    "min_rep_permutation",
    "inversions",
    "subsets",
]


class UnsupportedVariableError(ValueError):
    """The polynomial mentions a variable the Weyl group does not act on."""


@dataclass(frozen=True)
class SignedPermutation:
    """``perm[i-1]`` is the image of ``i``; indices in ``flips`` swap U and V.

    Acting on a variable: ``U_i -> U_perm(i)`` (or ``V_perm(i)`` when ``i`` is
    flipped), and symmetrically for ``V_i``.
    """

    perm: tuple[int, ...]
    flips: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        perm = tuple(self.perm)
        g = len(perm)
        if sorted(perm) != list(range(1, g + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{g}")
        flips = frozenset(self.flips)
        if not flips <= set(range(1, g + 1)):
            raise ValueError(f"flips {sorted(flips)} outside 1..{g}")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "flips", flips)

    @property
    def g(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, g: int) -> SignedPermutation:
        return cls(tuple(range(1, g + 1)))

    @classmethod
    def flip(cls, g: int, indices: Iterable[int]) -> SignedPermutation:
        return cls(tuple(range(1, g + 1)), frozenset(indices))

    @classmethod
    def transposition(cls, g: int, i: int, j: int) -> SignedPermutation:
        perm = list(range(1, g + 1))
        perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
        return cls(tuple(perm))

    def __call__(self, i: int, is_u: bool) -> tuple[int, bool]:
        return self.perm[i - 1], is_u != (i in self.flips)

    def compose(self, other: SignedPermutation) -> SignedPermutation:
        """``self ∘ other``: apply ``other`` first."""
        perm = tuple(self.perm[other.perm[i] - 1] for i in range(self.g))
        flips = frozenset(
            i for i in range(1, self.g + 1) if (i in other.flips) != (other.perm[i - 1] in self.flips)
        )
        return SignedPermutation(perm, flips)

    __matmul__ = compose

    def inverse(self) -> SignedPermutation:
        inv = [0] * self.g
        for i, j in enumerate(self.perm, start=1):
            inv[j - 1] = i
        return SignedPermutation(tuple(inv), frozenset(self.perm[i - 1] for i in self.flips))

    def is_unsigned(self) -> bool:
        return not self.flips


@lru_cache(maxsize=None)
def group_elements(g: int, signed: bool = True) -> tuple[SignedPermutation, ...]:
    """All 2^g·g! elements (or the g! unsigned ones), built once per genus."""
    flip_sets = [frozenset(s) for s in subsets(g)] if signed else [frozenset()]
    return tuple(
        SignedPermutation(perm, f) for perm in permutations(range(1, g + 1)) for f in flip_sets
    )


def subsets(g: int) -> list[tuple[int, ...]]:
    """Subsets of {1..g} ordered by size, then lexicographically."""
    return [c for r in range(g + 1) for c in combinations(range(1, g + 1), r)]


@lru_cache(maxsize=None)
def _slots(table: VariableTable, g: int) -> tuple[list[int], list[int], set[int]]:
    u = [table.index(f"U_{i}") for i in range(1, g + 1)]
    v = [table.index(f"V_{i}") for i in range(1, g + 1)]
    fixed = {table.index("p")} if "p" in table else set()
    return u, v, fixed


def _index_map(w: SignedPermutation, table: VariableTable) -> list[int]:
    u, v, _ = _slots(table, w.g)
    target = list(range(len(table)))
    for i in range(1, w.g + 1):
        j, stays = w(i, True)
        target[u[i - 1]] = u[j - 1] if stays else v[j - 1]
        target[v[i - 1]] = v[j - 1] if stays else u[j - 1]
    return target


def _check_vars(f: LaurentPolynomial, g: int) -> None:
    u, v, fixed = _slots(f.table, g)
    allowed = set(u) | set(v) | fixed
    bad = [n for n in f.variables() if f.table.index(n) not in allowed]
    if bad:
        raise UnsupportedVariableError(f"Weyl group does not act on {bad}")


def _apply(target: list[int], f: LaurentPolynomial) -> LaurentPolynomial:
    n = len(f.table)
    out = {}
    for e, c in f.terms.items():
        ne = [0] * n
        for i, k in enumerate(e):
            if k:
                ne[target[i]] = k
        out[tuple(ne)] = c
    return LaurentPolynomial(f.table, out)


def act(w: SignedPermutation, f: LaurentPolynomial) -> LaurentPolynomial:
    _check_vars(f, w.g)
    return _apply(_index_map(w, f.table), f)


def _invariant_under(f: LaurentPolynomial, g: int, signed: bool) -> bool:
    _check_vars(f, g)
    return all(_apply(_index_map(w, f.table), f) == f for w in group_elements(g, signed))


def is_invariant(f: LaurentPolynomial, g: int) -> bool:
    """Invariance under the full signed-permutation group (every element checked)."""
    return _invariant_under(f, g, True)


def is_invariant_sg(f: LaurentPolynomial, g: int) -> bool:
    """Invariance under plain permutations of the indices only."""
    return _invariant_under(f, g, False)


def orbit_sum(f: LaurentPolynomial, g: int) -> LaurentPolynomial:
    """Sum of the distinct images of a monomial under the full group."""
    if not f.is_monomial():
        raise ValueError("orbit_sum expects a monomial")
    images = {act(w, f) for w in group_elements(g)}
    total = LaurentPolynomial.zero(f.table)
    for m in images:
        total = total + m
    return total


def length_sign_vector(a: Iterable[int]) -> int:
    """l(a) = sum of the elements of a ⊆ {1..b_1}."""
    return sum(a)


def length_min_rep(D: Iterable[int], c: int | None = None) -> int:
    """l(m_D) = Σ d_j − c(c+1)/2."""
    D = sorted(D)
    if c is None:
        c = len(D)
    if len(D) != c:
        raise ValueError(f"|D| = {len(D)} but c = {c}")
    return sum(D) - c * (c + 1) // 2


def min_rep_permutation(D: Iterable[int], b: int) -> tuple[int, ...]:
    """The shortest permutation of 1..b sending 1..c onto D (both increasing)."""
    D = sorted(D)
    rest = [x for x in range(1, b + 1) if x not in D]
    return tuple(D + rest)


def inversions(perm: Iterable[int]) -> int:
    perm = list(perm)
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def standard_table(g: int) -> VariableTable:
    return VariableTable.standard(g)
