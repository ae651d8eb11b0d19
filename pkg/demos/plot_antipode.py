"""
Antipode of the 4-cycle
=======================

The cancellation-free antipode, the character q^rk applied to it, and
the relation to chi_q at d = -1.
"""

from gzonotope import IntPolynomial, antipode, chi_q_eval, family, f_poly_flats, zeta_q_of_antipode

g = family("cycle", 4)
s = antipode(g)
for term in s.terms:
    print(f"{term.coefficient:+4d}  rank {term.rank}  {sorted(term.flat_edges)}")

z = zeta_q_of_antipode(g)
print("zeta_q(S(C4)) =", z)
print("chi_q(C4, -1) =", chi_q_eval(g, IntPolynomial.x(), -1))
print("f(q)          =", z.negate_var() * (-1) ** g.n, "=", f_poly_flats(g))
