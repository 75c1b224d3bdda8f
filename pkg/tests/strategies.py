"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from siegel_hecke.poly_core import LaurentPolynomial, VariableTable
from siegel_hecke.weyl import SignedPermutation, standard_table

TABLE = VariableTable.of("p", "x", "y")

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
exponents = st.tuples(*(st.integers(-3, 3) for _ in TABLE.names))


@st.composite
def laurent(draw, table: VariableTable = TABLE, max_terms: int = 5) -> LaurentPolynomial:
    n = len(table.names)
    terms = draw(st.dictionaries(
        st.tuples(*(st.integers(-3, 3) for _ in range(n))), fractions, max_size=max_terms))
    return LaurentPolynomial(table, terms)


@st.composite
def nonzero_monomial(draw, table: VariableTable = TABLE) -> LaurentPolynomial:
    e = draw(st.tuples(*(st.integers(-3, 3) for _ in table.names)))
    c = draw(fractions.filter(lambda x: x != 0))
    return LaurentPolynomial(table, {e: c})


@st.composite
def signed_permutations(draw, g: int) -> SignedPermutation:
    perm = draw(st.permutations(range(1, g + 1)))
    flips = draw(st.frozensets(st.integers(1, g)))
    return SignedPermutation(tuple(perm), flips)


@st.composite
def uv_polys(draw, g: int) -> LaurentPolynomial:
    return draw(laurent(standard_table(g), max_terms=4))


points = st.fixed_dictionaries({
    "p": st.sampled_from([Fraction(2), Fraction(3), Fraction(-5, 2), Fraction(7, 3)]),
    "x": fractions.filter(lambda v: v != 0),
    "y": fractions.filter(lambda v: v != 0),
})
