"""
Permutohedra, cubes and cycles
==============================
"""

from gzonotope import IntPolynomial, eulerian_poly, f_poly_cycle_closed, f_poly_flats, family
from gzonotope.graph import random_tree

q = IntPolynomial.x()

# complete graphs give permutohedra: f(q) = A_n(q + 1)
for n in range(2, 7):
    f = f_poly_flats(family("complete", n))
    print(f"K_{n}: {f}    A_{n}(q+1) = {eulerian_poly(n).shift(1)}")

# any tree gives a cube
t = random_tree(6, seed=1)
print(t, f_poly_flats(t), "  (q+2)^5 =", (q + 2) ** 5)

# cycles: closed form against the flat sum
for n in range(3, 8):
    print(f"C_{n}: {f_poly_flats(family('cycle', n))}   closed form: {f_poly_cycle_closed(n)}")
