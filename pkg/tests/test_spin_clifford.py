from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from siegel_hecke.spin_clifford import (
    CliffordElement,
    bilinear_form,
    generator,
    hecke_weil_check,
    literal_theta_eigenvalue,
    m2_matches_orthogonal,
    spin_basis_vector,
    theta_action_check,
    theta_element,
    literal_theta_element,
    weil_numbers,
)
from siegel_hecke.weyl import subsets

G = 2
N = 2 * G + 1


@st.composite
def clifford(draw, g: int = G) -> CliffordElement:
    n = 2 * g + 1
    words = st.lists(st.integers(1, n), max_size=4).map(tuple)
    terms = draw(st.dictionaries(words, st.fractions(-5, 5, max_denominator=4), max_size=4))
    return CliffordElement(g, terms)


@settings(max_examples=150)
@given(clifford(), clifford(), clifford())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(clifford(), clifford(), clifford())
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("g", [1, 2, 3])
def test_defining_relation(g):
    B = bilinear_form(g)
    n = 2 * g + 1
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ui, uj = generator(g, i), generator(g, j)
            assert ui * uj + uj * ui == CliffordElement.scalar(g, 2 * B[i - 1][j - 1])


@pytest.mark.parametrize("g", [1, 2, 3])
def test_theta_eigenvalues(g):
    for I in subsets(g):
        assert not spin_basis_vector(g, I).is_zero()
        for i in range(1, g + 1):
            eps = theta_action_check(g, i, I)
            assert eps == (Fraction(1, 2) if i in I else Fraction(-1, 2))
            assert literal_theta_eigenvalue(g, i, I) == -eps


@pytest.mark.parametrize("g", [1, 2, 3])
def test_theta_element_is_negated_literal(g):
    for i in range(1, g + 1):
        assert theta_element(g, i) == -literal_theta_element(g, i)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_m2_is_orthogonal_algebra(g):
    assert m2_matches_orthogonal(g)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_weil_numbers_pair_up(g):
    nums = weil_numbers(g)
    assert len(nums) == 2 ** g and len(set(nums)) == 2 ** g


@pytest.mark.parametrize("g", [1, 2, 3])
def test_hecke_coefficients_are_weil_symmetric_functions(g):
    assert hecke_weil_check(g, "product")


def test_word_range_checked():
    with pytest.raises(ValueError):
        CliffordElement(1, {(7,): 1})
