"""Eigenvalue vectors of Eisenstein-type systems and the relations among them.

For each parabolic P the Hecke eigenvalues m_p, m_{p,i} become Laurent
polynomials in p and a few free variables t_j.  Two ways of counting the
relations among (m_p^2, m_{p,1}, .., m_{p,g-1}, 1) are compared: linear
dependencies over Q(p), and the algebraic count from the Jacobian rank.
"""

from siegel_hecke.parabolic import ParabolicDatum, enumerate_parabolics
from siegel_hecke.relations import (
    algebraic_relation_count,
    eigenvalue_vector,
    expected_relation_count,
    find_linear_relations,
    theorem_44_relation,
    y_polynomials,
)

print("Y polynomials:")
for i, y in enumerate(y_polynomials(4), 1):
    print(f"  Y_{i} = {y}")

g = 3
P = ParabolicDatum.all_ones(2, g)
vec = eigenvalue_vector(P)
print(f"\n{P.label()}: free variables {vec.plan.free}")
print(f"  m_p = {vec.m_p}")
rel = theorem_44_relation(g)
print("  the Y-relation annihilates the vector:", rel.apply(vec).is_zero())

print("\nrelation counts at g=4 (linear kernel / algebraic / g-k or g-k+1):")
for P in enumerate_parabolics(4):
    lin = len(find_linear_relations(P))
    alg = algebraic_relation_count(P)
    print(f"  {P.label():16s} {lin} / {alg} / {expected_relation_count(P)}")
