"""Standard parabolics of GSp_2g, packet parameters, p_w/q_w, minimal-length sets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .poly_core import LaurentPolynomial, VariableTable
from .weyl import length_min_rep, length_sign_vector

__all__ = [
    "ParabolicDatum",
    "PacketParam",
    "MinLengthRep",
    "compositions",
    "enumerate_parabolics",
    "packet_vectors",
    "enumerate_packet",
    "complement",
    "full_c",
    "pq_values",
    "min_length_set",
    "hodge_types",
    "hodge_generating_function",
    "T_TABLE",
]

T_TABLE = VariableTable.of("t")


@dataclass(frozen=True)
class ParabolicDatum:
    """Type (1 or 2) and ordered partition 𝔟_1 + .. + 𝔟_k = g."""

    ptype: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if self.ptype not in (1, 2):
            raise ValueError(f"parabolic type must be 1 or 2, got {self.ptype}")
        if not self.parts or any(b < 1 for b in self.parts):
            raise ValueError(f"parts must be positive integers, got {self.parts}")

    @property
    def g(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def offsets(self) -> tuple[int, ...]:
        """m_j = 𝔟_1 + .. + 𝔟_{j-1}, so block j is m_j+1 .. m_j+𝔟_j."""
        out, acc = [], 0
        for b in self.parts:
            out.append(acc)
            acc += b
        return tuple(out)

    def blocks(self) -> list[tuple[int, ...]]:
        return [tuple(range(m + 1, m + b + 1)) for m, b in zip(self.offsets, self.parts)]

    @classmethod
    def all_ones(cls, ptype: int, g: int) -> ParabolicDatum:
        return cls(ptype, (1,) * g)

    def label(self) -> str:
        return f"type{self.ptype}/({','.join(map(str, self.parts))})"


@dataclass(frozen=True, order=True)
class PacketParam:
    """c_1..c_k (type 1) or c_2..c_k (type 2)."""

    c: tuple[int, ...]


@dataclass(frozen=True)
class MinLengthRep:
    """(D_1..D_k) for type 1; (𝔞, D_2..D_k) for type 2, with D_i in local indices."""

    a: tuple[int, ...] | None
    D: tuple[tuple[int, ...], ...]


def compositions(g: int) -> list[tuple[int, ...]]:
    """Ordered partitions of g, fewest parts first, larger leading parts first."""
    out = []
    for mask in range(1 << (g - 1)):
        parts, run = [], 1
        for i in range(g - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return sorted(out, key=lambda t: (len(t), tuple(-x for x in t)))


def enumerate_parabolics(g: int) -> list[ParabolicDatum]:
    if g < 1:
        raise ValueError("g must be at least 1")
    return [ParabolicDatum(t, parts) for t in (1, 2) for parts in compositions(g)]


def _free_parts(P: ParabolicDatum) -> tuple[int, ...]:
    return P.parts if P.ptype == 1 else P.parts[1:]


def packet_vectors(P: ParabolicDatum) -> list[PacketParam]:
    """All c vectors before the complement identification."""
    return [PacketParam(c) for c in product(*(range(b + 1) for b in _free_parts(P)))]


def complement(P: ParabolicDatum, c: PacketParam) -> PacketParam:
    return PacketParam(tuple(b - x for b, x in zip(_free_parts(P), c.c)))


def enumerate_packet(P: ParabolicDatum) -> list[PacketParam]:
    """Canonical representatives: the lexicographically smaller of c and its complement."""
    return sorted({min(c, complement(P, c)) for c in packet_vectors(P)})


def full_c(P: ParabolicDatum, c: PacketParam) -> tuple[int, ...]:
    """c_1..c_k, with c_1 = 0 inserted for type 2."""
    if len(c.c) != len(_free_parts(P)):
        raise ValueError(f"{c} does not fit {P.label()}")
    if any(not 0 <= x <= b for x, b in zip(c.c, _free_parts(P))):
        raise ValueError(f"{c} out of range for {P.label()}")
    return c.c if P.ptype == 1 else (0,) + c.c


def pq_values(P: ParabolicDatum, c: PacketParam) -> tuple[int, int]:
    """(p_w, q_w) from the closed forms; type 2 subtracts 𝔟_1(𝔟_1+1)/2 from p_w."""
    cs = full_c(P, c)
    b = P.parts
    g, k = P.g, P.k
    s = sum(cs)
    sigma2 = sum(cs[i] * cs[j] for i in range(k) for j in range(i + 1, k))
    upper = sum(cs[i] * b[j] for i in range(k) for j in range(i + 1, k))
    lower = sum(cs[i] * b[j] for i in range(k) for j in range(i))
    p_w = (g - s) * (g + 1 - s) // 2 + upper - sigma2
    q_w = s * (1 + s) // 2 + lower - sigma2
    if P.ptype == 2:
        p_w -= b[0] * (b[0] + 1) // 2
    return p_w, q_w


def min_length_set(P: ParabolicDatum, c: PacketParam) -> list[tuple[MinLengthRep, int]]:
    """All ρ ∈ 𝔖(𝔠,P) with l(m_ρ)."""
    cs = full_c(P, c)
    choices = []
    for idx, (b, ci) in enumerate(zip(P.parts, cs)):
        if P.ptype == 2 and idx == 0:
            continue
        choices.append(list(combinations(range(1, b + 1), ci)))
    if P.ptype == 2:
        signs = [s for r in range(P.parts[0] + 1) for s in combinations(range(1, P.parts[0] + 1), r)]
    else:
        signs = [None]
    out = []
    for a in signs:
        for Ds in product(*choices):
            length = sum(length_min_rep(D, len(D)) for D in Ds)
            if a is not None:
                length += length_sign_vector(a)
            out.append((MinLengthRep(a, tuple(Ds)), length))
    return out


@lru_cache(maxsize=None)
def _hodge_entries(P: ParabolicDatum) -> tuple[tuple[int, int, bool], ...]:
    entries = []
    for c in packet_vectors(P):
        p_w, q_w = pq_values(P, c)
        for rep, length in min_length_set(P, c):
            entries.append((p_w + length, q_w + length, not rep.a))
    return tuple(entries)


def hodge_types(P: ParabolicDatum, minus_only: bool = False) -> Counter:
    """Multiset {(p_w + l, q_w + l)} over all c and ρ ∈ 𝔖(𝔠,P).

    With ``minus_only`` (type 2) only ρ with 𝔞 = ∅ are kept; for the all-ones
    partition these are the Hodge types of M⁻.
    """
    return Counter((p, q) for p, q, minus in _hodge_entries(P) if minus or not minus_only)


def hodge_generating_function(P: ParabolicDatum, minus_only: bool | None = None) -> LaurentPolynomial:
    """Σ t^p over the Hodge types; type 2 defaults to the M⁻ part."""
    if minus_only is None:
        minus_only = P.ptype == 2
    out = LaurentPolynomial.zero(T_TABLE)
    for (p, _), mult in hodge_types(P, minus_only).items():
        out += LaurentPolynomial.monomial(T_TABLE, {"t": p}, mult)
    return out
