"""
A Whitney twist pair on six vertices
====================================

Search every labeled 6-vertex graph for the f-polynomial
126 + 348q + 358q^2 + 164q^3 + 30q^4 + q^5, then look for a twist that
joins two different isomorphism classes.  Takes about ten seconds.
"""

from itertools import combinations, permutations

from gzonotope import IntPolynomial, ValidationError, f_poly_flats, whitney_twist
from gzonotope.chromatic import acyclic_count
from gzonotope.graph import all_graphs
from gzonotope.qsym import hook_coefficient

target = IntPolynomial([126, 348, 358, 164, 30, 1])


def canon(g):
    # smallest relabeled edge list; 720 relabelings is nothing at n = 6
    return min(
        tuple(sorted(tuple(sorted((p[i - 1], p[j - 1]))) for i, j in g.edges))
        for p in permutations(g.vertices)
    )


# cheap filter on the vertex count first
hits = [g for g in all_graphs(6) if acyclic_count(g) == 126 and f_poly_flats(g) == target]
classes = {}
for g in hits:
    classes.setdefault(canon(g), g)
reps = list(classes.values())
print(f"{len(hits)} labeled graphs, {len(reps)} isomorphism classes")

g1 = reps[0]
for u, v in combinations(g1.vertices, 2):
    others = [x for x in g1.vertices if x not in (u, v)]
    for r in range(1, len(others)):
        for side in combinations(others, r):
            try:
                g2 = whitney_twist(g1, u, v, side)
            except ValidationError:
                continue
            if canon(g2) != canon(g1):
                print(f"{g1} --twist {{{u},{v}}} side {set(side)}--> {g2}")
                print("  f:", f_poly_flats(g1), "|", f_poly_flats(g2))
                print("  [m_3,1,1,1] Psi_q:", hook_coefficient(g1), "|", hook_coefficient(g2))
                raise SystemExit
