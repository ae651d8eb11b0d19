"""Chromatic polynomial and acyclic orientation counts."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import BudgetError
from .graph import Graph, components, induced
from .poly import IntPolynomial

ORIENTATION_EDGE_BUDGET = 24


def _contract_first(n: int, edges: tuple) -> tuple:
    # merge v into u and close the gap left by v
    u, v = edges[0]

    def lab(x):
        if x == v:
            x = u
        return x - 1 if x > v else x

    es = set()
    for a, b in edges[1:]:
        a, b = lab(a), lab(b)
        if a != b:
            es.add((min(a, b), max(a, b)))
    return tuple(sorted(es))


@lru_cache(maxsize=None)
def _chromatic(n: int, edges: tuple) -> IntPolynomial:
    m = len(edges)
    if m == 0:
        return IntPolynomial.monomial(n, var="d")
    if m == n * (n - 1) // 2:
        return IntPolynomial.falling(n, "d")
    g = Graph(n, edges)
    comps = components(g)
    if len(comps) > 1:
        out = IntPolynomial.const(1, "d")
        for block in comps:
            h = induced(g, block)
            out = out * _chromatic(h.n, h.edges)
        return out
    if m == n - 1:
        # tree
        return IntPolynomial.x("d") * IntPolynomial((-1, 1), "d") ** (n - 1)
    return _chromatic(n, edges[1:]) - _chromatic(n - 1, _contract_first(n, edges))


def chromatic_poly(g: Graph) -> IntPolynomial:
    """Chromatic polynomial in ``d`` by memoized deletion-contraction.

    The pivot is always the lexicographically first edge; the memo is keyed
    by the canonical ``(n, edges)`` encoding and shared process-wide.
    """
    return _chromatic(g.n, g.edges)


def chromatic_cache_clear() -> None:
    _chromatic.cache_clear()


def acyclic_count(g: Graph) -> int:
    """Number of acyclic orientations, as (-1)^n chi(g, -1)."""
    return (-1) ** g.n * chromatic_poly(g)(-1)


def _orientation_batch(g: Graph, masks: np.ndarray) -> np.ndarray:
    """Boolean adjacency matrices for the orientations encoded by ``masks``.

    Bit k of a mask set means edge k = (i, j) points j -> i, else i -> j.
    """
    n = g.n
    adj = np.zeros((len(masks), n, n), dtype=np.int32)
    for k, (i, j) in enumerate(g.edges):
        flip = ((masks >> k) & 1).astype(bool)
        adj[~flip, i - 1, j - 1] = 1
        adj[flip, j - 1, i - 1] = 1
    return adj


def acyclic_count_brute(g: Graph, chunk: int = 1 << 15) -> int:
    """Count acyclic orientations by checking all 2^|E| of them.

    A digraph on n vertices is acyclic iff its adjacency matrix A is
    nilpotent, i.e. A^(2^s) = 0 for 2^s >= n.
    """
    m = g.m
    if m > ORIENTATION_EDGE_BUDGET:
        raise BudgetError(
            f"{m} edges means 2^{m} orientations (limit 2^{ORIENTATION_EDGE_BUDGET}); "
            "use acyclic_count instead"
        )
    if m == 0:
        return 1
    squarings = max(0, (g.n - 1).bit_length())
    total = 0
    for start in range(0, 1 << m, chunk):
        masks = np.arange(start, min(start + chunk, 1 << m), dtype=np.int64)
        p = _orientation_batch(g, masks)
        for _ in range(squarings):
            p = np.minimum(p @ p, 1)
        total += int(np.count_nonzero(~p.any(axis=(1, 2))))
    return total
