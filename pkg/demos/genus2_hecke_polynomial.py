"""From Satake images to the genus-2 Hecke polynomial and its Weil numbers."""

from siegel_hecke.hecke_poly import hecke_polynomial, satake_of
from siegel_hecke.render import latex_hecke_block, latex_phi_expansion
from siegel_hecke.satake import satake_phi_expansion, satake_tau_p
from siegel_hecke.spin_clifford import hecke_weil_check, weil_numbers

g = 2
print(f"Satake image of tau_p at g={g}:  {satake_tau_p(g)}")
for i in range(g + 1):
    exp = {k: v for k, v in satake_phi_expansion(g, i).items() if not v.is_zero()}
    print(latex_phi_expansion(f"tau_p{i}", exp))

coeffs = hecke_polynomial(g)
print("\nHecke polynomial coefficients, with tau_{p,g} set to 1:")
print(latex_hecke_block([h.poly for h in coeffs]))

print("\nEach coefficient maps back to a symmetric function of the roots U_I:")
for i, h in enumerate(coeffs):
    print(f"  h_{i} -> {satake_of(h)}")

print("\nWeil numbers a_0 b_I:", ", ".join(str(x) for x in weil_numbers(g)))
print("alpha(h_i) equals (-1)^i sigma_i of the Weil numbers:", hecke_weil_check(g))
