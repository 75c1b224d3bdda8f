from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from siegel_hecke.poly_core import LaurentPolynomial, VariableTable
from siegel_hecke.weyl import (
    SignedPermutation,
    UnsupportedVariableError,
    act,
    group_elements,
    inversions,
    is_invariant,
    is_invariant_sg,
    length_min_rep,
    min_rep_permutation,
    orbit_sum,
    standard_table,
)

from strategies import signed_permutations, uv_polys

G = 3


@settings(max_examples=200)
@given(signed_permutations(G), signed_permutations(G), uv_polys(G))
def test_action_composes(a, b, f):
    assert act(a, act(b, f)) == act(a @ b, f)


@given(signed_permutations(G), uv_polys(G))
def test_inverse_undoes_action(a, f):
    assert act(a.inverse(), act(a, f)) == f
    assert act(SignedPermutation.identity(G), f) == f


@given(signed_permutations(G), uv_polys(G), uv_polys(G))
def test_action_is_a_ring_map(a, f, h):
    assert act(a, f * h) == act(a, f) * act(a, h)
    assert act(a, f + h) == act(a, f) + act(a, h)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_group_order(g):
    assert len(group_elements(g)) == 2 ** g * factorial(g)
    assert len(group_elements(g, signed=False)) == factorial(g)


@given(st.permutations(range(1, G + 1)), st.frozensets(st.integers(1, G)), uv_polys(G))
def test_orbit_sum_is_invariant(perm, flips, f):
    if f.is_zero():
        return
    mono = LaurentPolynomial(f.table, dict([next(iter(f.terms.items()))]))
    s = orbit_sum(mono, G)
    assert act(SignedPermutation(tuple(perm), flips), s) == s
    assert is_invariant(s, G)


def test_invariance_distinguishes_signed_group():
    T = standard_table(2)
    f = T.var("U_1") + T.var("U_2")
    assert is_invariant_sg(f, 2)
    assert not is_invariant(f, 2)


def test_unknown_variable_rejected():
    T = VariableTable.of("p", "U_1", "V_1", "z")
    with pytest.raises(UnsupportedVariableError):
        act(SignedPermutation.identity(1), T.var("z"))


@pytest.mark.parametrize("b", range(1, 7))
def test_length_equals_inversions(b):
    for c in range(b + 1):
        for D in combinations(range(1, b + 1), c):
            assert length_min_rep(D, c) == inversions(min_rep_permutation(D, b))


def test_invalid_permutation_rejected():
    with pytest.raises(ValueError):
        SignedPermutation((1, 1))
    with pytest.raises(ValueError):
        SignedPermutation((1, 2), frozenset({3}))
