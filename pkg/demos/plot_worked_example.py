"""
Triangle with a pendant edge
============================

Psi_q, its principal specialization and the f-polynomial of the
hexagonal prism, computed three ways.
"""

from gzonotope import (
    chi_q,
    f_poly_flats,
    f_poly_main,
    f_vector_oracle,
    family,
    make_graph,
    psi_q,
)

g = make_graph(4, [(1, 2), (1, 3), (2, 3), (3, 4)])

# the q-chromatic symmetric function in the monomial basis
print("Psi_q =", psi_q(g))

# chi_q(g, d), grouped by powers of q
for k, coeff in enumerate(chi_q(g).by_q_power()):
    print(f"  [q^{k}] chi_q = {coeff}")

# f-polynomial: flat sum, specialization at d = -1, covector count
print("flats :", f_poly_flats(g))
print("main  :", f_poly_main(g))
print("oracle:", f_vector_oracle(g))

# the zonotope is a product of a hexagon and a segment
print("K3 x K2:", f_poly_flats(family("complete", 3)) * f_poly_flats(family("complete", 2)))
