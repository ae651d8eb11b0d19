"""Flats of the graphical matroid, as partitions of V into connected blocks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ValidationError
from .graph import Edge, Graph, VertexPartition, graph_rank, make_graph, components


@dataclass(frozen=True)
class Flat:
    partition: VertexPartition
    edge_set: frozenset[Edge]
    rank: int

    @property
    def num_blocks(self) -> int:
        return len(self.partition)


def _connected_mask(mask: int, adj: list[int]) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nbrs = adj[low.bit_length() - 1] & mask & ~seen
        seen |= nbrs
        frontier |= nbrs
    return seen == mask


def _rgs(n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length n in lexicographic order."""
    a = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            yield a
            return
        for k in range(mx + 2):
            a[i] = k
            yield from rec(i + 1, max(mx, k))

    if n:
        yield from rec(1, 0)


def enumerate_flats(g: Graph) -> Iterator[Flat]:
    """Yield every flat once, ordered by the restricted growth string
    of its partition (block of vertex v = label of v's block)."""
    adj = g.adjacency_masks()
    for rgs in _rgs(g.n):
        k = max(rgs) + 1
        masks = [0] * k
        for v, b in enumerate(rgs):
            masks[b] |= 1 << v
        if all(m & (m - 1) == 0 or _connected_mask(m, adj) for m in masks):
            blocks = tuple(
                tuple(v + 1 for v in range(g.n) if m >> v & 1) for m in masks
            )
            es = frozenset((i, j) for i, j in g.edges if rgs[i - 1] == rgs[j - 1])
            yield Flat(VertexPartition(blocks), es, g.n - k)


def flats_of_rank(g: Graph, k: int) -> list[Flat]:
    return [f for f in enumerate_flats(g) if f.rank == k]


def is_flat(g: Graph, edge_subset: Iterable[Edge]) -> bool:
    es = {(min(a, b), max(a, b)) for a, b in edge_subset}
    missing = es - set(g.edges)
    if missing:
        raise ValidationError(f"edges {sorted(missing)} are not edges of the graph")
    where = components(make_graph(g.n, es)).block_index()
    return all((i, j) in es for i, j in g.edges if where[i] == where[j])


def flat_from_edges(g: Graph, edge_subset: Iterable[Edge]) -> Flat:
    es = frozenset((min(a, b), max(a, b)) for a, b in edge_subset)
    if not is_flat(g, es):
        raise ValidationError(f"{sorted(es)} is not a flat")
    sub = make_graph(g.n, es)
    return Flat(components(sub), es, graph_rank(sub))
