import pytest

from siegel_hecke import golden
from siegel_hecke.parabolic import ParabolicDatum, enumerate_parabolics
from siegel_hecke.poly_core import P_TABLE, LaurentPolynomial
from siegel_hecke.relations import (
    StructureError,
    algebraic_relation_count,
    appendix9_check,
    eigenvalue_vector,
    expected_relation_count,
    find_linear_relations,
    mminus_check,
    substitution_plan,
    theorem_44_relation,
    weil_multiset_check,
    y_polynomials,
)


def test_substitution_plan_type2():
    plan = substitution_plan(ParabolicDatum.all_ones(2, 3))
    assert plan.free == ("t_2", "t_3")
    assert plan.b[0] == plan.table.var("p")


def test_single_block_has_no_free_variables():
    assert substitution_plan(ParabolicDatum(2, (3,))).free == ()
    assert len(substitution_plan(ParabolicDatum(1, (3,))).free) == 1


def test_y_polynomials_match_golden():
    ys = golden.load("table7")["Y"]
    assert y_polynomials(len(ys)) == tuple(golden.parse_laurent(t, P_TABLE) for t in ys)


@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
def test_y_relation_annihilates(g):
    rel = theorem_44_relation(g)
    vec = eigenvalue_vector(ParabolicDatum.all_ones(2, g))
    assert vec.m_pi[-1] == 1
    assert rel.apply(vec).is_zero()


def test_y_relation_spherical_breaks_at_genus_three():
    with pytest.raises(ArithmeticError):
        theorem_44_relation(3, "spherical")


@pytest.mark.parametrize("g", [2, 3, 4])
def test_y_relation_spans_the_kernel(g):
    rels = find_linear_relations(ParabolicDatum.all_ones(2, g))
    assert len(rels) == 1
    assert rels[0].is_proportional(theorem_44_relation(g))


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_discovered_relations_annihilate(g):
    for P in enumerate_parabolics(g):
        vec = eigenvalue_vector(P)
        for rel in find_linear_relations(P):
            assert rel.apply(vec).is_zero()


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5])
def test_all_ones_linear_counts(g):
    for ptype in (1, 2):
        if ptype == 2 and g == 1:
            continue
        P = ParabolicDatum.all_ones(ptype, g)
        assert len(find_linear_relations(P)) == expected_relation_count(P)


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5])
def test_algebraic_counts(g):
    for P in enumerate_parabolics(g):
        assert algebraic_relation_count(P) == expected_relation_count(P), P.label()


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5])
def test_weil_multisets(g):
    for P in enumerate_parabolics(g):
        assert weil_multiset_check(P), P.label()


def test_weil_multiset_rejects_duplicates(monkeypatch):
    from siegel_hecke import relations

    real = relations.min_length_set
    monkeypatch.setattr(relations, "min_length_set", lambda P, c: real(P, c) * 2)
    with pytest.raises(StructureError):
        weil_multiset_check(ParabolicDatum.all_ones(1, 2))


def test_mminus_sigma_identities():
    rep = appendix9_check("product", raise_on_failure=False)
    assert rep.ok, {k: v for k, v in rep.checks.items() if not v}


def test_mminus_quartic():
    assert all(mminus_check("product").values())


def test_relation_serialization():
    rel = theorem_44_relation(2)
    d = rel.to_dict()
    assert d["g"] == 2
    assert set(d["coefficients"]) == set(rel.labels)
