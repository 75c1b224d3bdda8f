"""Packets of archimedean representations and their Hodge statistics."""

from siegel_hecke.parabolic import (
    ParabolicDatum,
    enumerate_packet,
    hodge_generating_function,
    hodge_types,
    min_length_set,
    pq_values,
)

for P in (ParabolicDatum.all_ones(1, 3), ParabolicDatum.all_ones(2, 3), ParabolicDatum(1, (2, 1))):
    print(P.label())
    for c in enumerate_packet(P):
        lengths = sorted(n for _, n in min_length_set(P, c))
        print(f"  c={c.c}  (p_w, q_w)={pq_values(P, c)}  lengths {lengths}")
    print("  Hodge types:", dict(sorted(hodge_types(P).items())))
    if P.parts == (1,) * P.g:
        print("  generating function:", hodge_generating_function(P))
