"""f-polynomial of the graphical zonotope and the graph antipode.

Two formula routes are provided:

* ``f_poly_flats``: sum over flats F of a(G/F) q^rk(F);
* ``f_poly_main``: (-1)^n chi_q(G, -1) with q replaced by -q.

Both are defined for disconnected graphs as well (the zonotope is then a
product over components); the theorem behind the second route is stated
for connected graphs, so agreement there is an extension checked by tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .chromatic import acyclic_count
from .errors import ValidationError
from .flats import enumerate_flats
from .graph import Edge, Graph, contract, graph_rank
from .poly import IntPolynomial
from .qsym import chi_q


@dataclass(frozen=True)
class AntipodeTerm:
    coefficient: int
    flat_edges: frozenset[Edge]
    rank: int


@dataclass
class AntipodeExpansion:
    host: Graph
    terms: list[AntipodeTerm]

    def __str__(self) -> str:
        out = []
        for t in self.terms:
            es = "{" + ",".join(f"{i}{j}" for i, j in sorted(t.flat_edges)) + "}"
            out.append(f"{t.coefficient:+d}*G[{es}]")
        return " ".join(out)


def antipode(g: Graph) -> AntipodeExpansion:
    """Cancellation-free antipode: one term (-1)^c(F) a(G/F) per flat F."""
    terms = [
        AntipodeTerm((-1) ** f.num_blocks * acyclic_count(contract(g, f.partition)), f.edge_set, f.rank)
        for f in enumerate_flats(g)
    ]
    return AntipodeExpansion(g, terms)


def zeta_q_of_antipode(g: Graph) -> IntPolynomial:
    """Apply the character Gamma -> q^rk(Gamma) to the antipode of g."""
    out = [0] * g.n
    for t in antipode(g).terms:
        out[t.rank] += t.coefficient
    return IntPolynomial(out, "q")


def f_poly_flats(g: Graph) -> IntPolynomial:
    out = [0] * g.n
    for f in enumerate_flats(g):
        out[f.rank] += acyclic_count(contract(g, f.partition))
    return IntPolynomial(out, "q")


def f_poly_main(g: Graph, budget: int | None = None) -> IntPolynomial:
    neg_q = IntPolynomial((0, -1), "q")
    return chi_q(g, budget).evaluate(neg_q, -1) * (-1) ** g.n


def f_vector(g: Graph) -> list[int]:
    """Face counts f_0, ..., f_rk by dimension."""
    p = f_poly_flats(g)
    return [p[k] for k in range(graph_rank(g) + 1)]


def eulerian_poly(n: int) -> IntPolynomial:
    """Descent generating polynomial of S_n, via A(n, k) = (k+1)A(n-1, k) + (n-k)A(n-1, k-1)."""
    if n < 1:
        raise ValidationError(f"Eulerian polynomial needs n >= 1, got {n}")
    row = [1]
    for m in range(2, n + 1):
        prev = row + [0]
        row = [(k + 1) * prev[k] + ((m - k) * prev[k - 1] if k else 0) for k in range(m)]
    return IntPolynomial(row, "q")


def eulerian_poly_brute(n: int) -> IntPolynomial:
    out = [0] * n
    for pi in permutations(range(n)):
        out[sum(pi[i] > pi[i + 1] for i in range(n - 1))] += 1
    return IntPolynomial(out, "q")


def f_poly_cycle_closed(n: int) -> IntPolynomial:
    """q^n + q^(n-1) + (q+2)^n - 2(q+1)^n."""
    if n < 3:
        raise ValidationError(f"cycle needs n >= 3, got {n}")
    q = IntPolynomial.x("q")
    return q ** n + q ** (n - 1) + (q + 2) ** n - 2 * (q + 1) ** n
