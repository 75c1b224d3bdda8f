from collections import Counter
from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from siegel_hecke.parabolic import (
    T_TABLE,
    PacketParam,
    ParabolicDatum,
    complement,
    compositions,
    enumerate_packet,
    enumerate_parabolics,
    full_c,
    hodge_generating_function,
    hodge_types,
    min_length_set,
    packet_vectors,
    pq_values,
)
from siegel_hecke.poly_core import LaurentPolynomial

G_MAX = 6


def _all_pairs():
    for g in range(1, G_MAX + 1):
        for P in enumerate_parabolics(g):
            for c in packet_vectors(P):
                yield P, c


def _prod_t(lo, g):
    t = T_TABLE.var("t")
    out = LaurentPolynomial.constant(T_TABLE, 1)
    for i in range(lo, g + 1):
        out *= t ** i + 1
    return out


def test_compositions_count():
    for g in range(1, 8):
        assert len(compositions(g)) == 2 ** (g - 1)
        assert all(sum(c) == g for c in compositions(g))


def test_parabolic_count():
    for g in range(1, 6):
        assert len(enumerate_parabolics(g)) == 2 ** g


def test_sum_identity():
    for P, c in _all_pairs():
        fc = full_c(P, c)
        pw, qw = pq_values(P, c)
        expected = P.g * (P.g + 1) // 2 - sum(x * (b - x) for x, b in zip(fc, P.parts))
        if P.ptype == 2:
            expected -= P.parts[0] * (P.parts[0] + 1) // 2
        assert pw + qw == expected, (P, c)


def test_complement_swaps_hodge_numbers():
    for P, c in _all_pairs():
        pw, qw = pq_values(P, c)
        assert pq_values(P, complement(P, c)) == (qw, pw)
        assert complement(P, complement(P, c)) == c


def test_zero_vector_values():
    for g in range(1, G_MAX + 1):
        for P in enumerate_parabolics(g):
            if P.ptype == 1:
                assert pq_values(P, PacketParam((0,) * P.k)) == (g * (g + 1) // 2, 0)


@pytest.mark.parametrize("g", range(1, G_MAX + 1))
def test_packet_sizes_and_generating_functions(g):
    B = ParabolicDatum.all_ones(1, g)
    assert len(enumerate_packet(B)) == 2 ** (g - 1)
    assert hodge_generating_function(B) == _prod_t(1, g)
    if g >= 2:
        P2 = ParabolicDatum.all_ones(2, g)
        assert len(enumerate_packet(P2)) == 2 ** (g - 2)
        assert hodge_generating_function(P2) == _prod_t(2, g)


def test_single_block_packet_size():
    for g in range(1, G_MAX + 1):
        assert len(enumerate_packet(ParabolicDatum(1, (g,)))) == (g + 2) // 2


def test_min_length_set_cardinality():
    for P, c in _all_pairs():
        fc = full_c(P, c)
        n = len(min_length_set(P, c))
        if P.ptype == 1:
            assert n == prod(comb(b, x) for b, x in zip(P.parts, fc))
        else:
            assert n == 2 ** P.parts[0] * prod(comb(b, x) for b, x in zip(P.parts[1:], fc[1:]))


def _box_partitions(rows: int, cols: int) -> Counter:
    """Sizes of all Young diagrams inside a rows×cols box, enumerated directly."""
    sizes: Counter = Counter()

    def rec(left: int, cap: int, total: int) -> None:
        sizes[total] += 1
        if left == 0:
            return
        for part in range(1, cap + 1):
            rec(left - 1, part, total + part)

    rec(rows, cols, 0)
    return sizes


@given(st.integers(1, 8).flatmap(lambda g: st.tuples(st.just(g), st.integers(0, g))))
def test_young_diagram_identity(gc):
    g, c = gc
    P = ParabolicDatum(1, (g,))
    lengths = Counter(n for _, n in min_length_set(P, PacketParam((c,))))
    assert lengths == _box_partitions(c, g - c)


def test_hodge_types_are_symmetric_under_swap():
    for g in range(1, 5):
        for P in enumerate_parabolics(g):
            types = hodge_types(P)
            assert types == Counter({(q, p): m for (p, q), m in types.items()})


def test_invalid_parabolic_rejected():
    with pytest.raises(ValueError):
        ParabolicDatum(3, (1,))
    with pytest.raises(ValueError):
        ParabolicDatum(1, (0, 2))


def test_labels():
    assert ParabolicDatum(1, (2, 1)).label() == "type1/(2,1)"
