"""Simple undirected graphs on vertices 1..n.

Graphs are immutable and canonical: edges are stored as ``(i, j)`` with
``i < j``, sorted and deduplicated, so two equal ``Graph`` values are the
same labeled graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ValidationError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"graph needs at least one vertex, got n={self.n}")
        prev = None
        for e in self.edges:
            i, j = e
            if not (1 <= i < j <= self.n):
                raise ValidationError(f"edge {e} is not a normalized pair in 1..{self.n}")
            if prev is not None and e <= prev:
                raise ValidationError("edges must be strictly sorted; use make_graph")
            prev = e

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def adjacency_masks(self) -> list[int]:
        """Bit ``w-1`` of entry ``v-1`` is set iff ``v`` and ``w`` are adjacent."""
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i - 1] |= 1 << (j - 1)
            masks[j - 1] |= 1 << (i - 1)
        return masks

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def __str__(self) -> str:
        es = ",".join(f"{i}{j}" if self.n < 10 else f"{i}-{j}" for i, j in self.edges)
        return f"Graph(n={self.n}, E={{{es}}})"


@dataclass(frozen=True)
class VertexPartition:
    """Unordered set partition of 1..n; blocks sorted, ordered by minimum."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "VertexPartition":
        bs = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in bs):
            raise ValidationError("partition blocks must be nonempty")
        bs.sort(key=lambda b: b[0])
        return cls(tuple(bs))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def check_covers(self, n: int) -> None:
        seen = sorted(v for b in self.blocks for v in b)
        if seen != list(range(1, n + 1)):
            raise ValidationError(f"{self.blocks} is not a partition of 1..{n}")

    def block_index(self) -> dict[int, int]:
        return {v: k for k, b in enumerate(self.blocks) for v in b}


def make_graph(n: int, raw_edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a canonical graph; duplicate edges are merged silently."""
    if n < 1:
        raise ValidationError(f"graph needs at least one vertex, got n={n}")
    es = set()
    for pair in raw_edges:
        a, b = (int(x) for x in pair)
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValidationError(f"edge ({a},{b}) has a vertex outside 1..{n}")
        if a == b:
            raise ValidationError(f"self-loop ({a},{b}) is not allowed in a simple graph")
        es.add((min(a, b), max(a, b)))
    return Graph(n, tuple(sorted(es)))


def components(g: Graph) -> VertexPartition:
    adj = g.adjacency()
    seen: set[int] = set()
    blocks = []
    for s in g.vertices:
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        blocks.append(comp)
    return VertexPartition.of(blocks)


def num_components(g: Graph) -> int:
    return len(components(g))


def graph_rank(g: Graph) -> int:
    """Size of a spanning forest, i.e. n minus the number of components."""
    return g.n - num_components(g)


def is_connected(g: Graph) -> bool:
    return num_components(g) == 1


def _check_vertex_set(g: Graph, vs: Iterable[int]) -> list[int]:
    vs = sorted(set(vs))
    if not vs:
        raise ValidationError("vertex set must be nonempty")
    bad = [v for v in vs if not 1 <= v <= g.n]
    if bad:
        raise ValidationError(f"vertices {bad} are outside 1..{g.n}")
    return vs


def induced(g: Graph, vs: Iterable[int]) -> Graph:
    """Induced subgraph on ``vs``, relabeled 1..|vs| in increasing order."""
    vs = _check_vertex_set(g, vs)
    relabel = {v: k for k, v in enumerate(vs, 1)}
    es = [(relabel[i], relabel[j]) for i, j in g.edges if i in relabel and j in relabel]
    return Graph(len(vs), tuple(sorted(es)))


def spanning_subgraph(g: Graph, edge_subset: Iterable[Edge]) -> Graph:
    """The graph (V, F) on the same vertex set."""
    return make_graph(g.n, edge_subset)


def contract(g: Graph, p: VertexPartition) -> Graph:
    """Quotient graph with one vertex per block of ``p``, in block order.

    Every block must induce a connected subgraph, i.e. ``p`` comes from a flat.
    """
    p.check_covers(g.n)
    for b in p.blocks:
        if len(b) > 1 and not is_connected(induced(g, b)):
            raise ValidationError(f"block {b} does not induce a connected subgraph")
    where = p.block_index()
    es = set()
    for i, j in g.edges:
        a, b = where[i] + 1, where[j] + 1
        if a != b:
            es.add((min(a, b), max(a, b)))
    return Graph(len(p), tuple(sorted(es)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.edges + tuple((i + shift, j + shift) for i, j in g2.edges))


def wedge(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Glue ``g1`` and ``g2`` by identifying ``v1`` with ``v2``.

    Labels of ``g1`` are kept; the other vertices of ``g2`` follow in
    increasing order as ``g1.n + 1, ...``.
    """
    if not 1 <= v1 <= g1.n:
        raise ValidationError(f"wedge vertex {v1} is outside 1..{g1.n}")
    if not 1 <= v2 <= g2.n:
        raise ValidationError(f"wedge vertex {v2} is outside 1..{g2.n}")
    relabel = {v2: v1}
    nxt = g1.n + 1
    for w in g2.vertices:
        if w != v2:
            relabel[w] = nxt
            nxt += 1
    es = list(g1.edges) + [(relabel[i], relabel[j]) for i, j in g2.edges]
    return make_graph(g1.n + g2.n - 1, es)


def whitney_twist(g: Graph, u: int, v: int, side: Iterable[int]) -> Graph:
    """Twist ``g`` around the 2-cut ``{u, v}``, swapping u and v on ``side``.

    ``side`` must be separated from the rest of the graph by ``{u, v}``.
    """
    side = set(side)
    for x in (u, v):
        if not 1 <= x <= g.n:
            raise ValidationError(f"vertex {x} is outside 1..{g.n}")
    if u == v:
        raise ValidationError("twist needs two distinct cut vertices")
    if u in side or v in side:
        raise ValidationError("the twisted side must not contain u or v")
    if any(not 1 <= x <= g.n for x in side):
        raise ValidationError(f"side {sorted(side)} has vertices outside 1..{g.n}")
    rest = set(g.vertices) - side - {u, v}
    for i, j in g.edges:
        if (i in side and j in rest) or (j in side and i in rest):
            raise ValidationError(f"edge ({i},{j}) crosses the cut {{{u},{v}}}")
    swap = {u: v, v: u}
    es = []
    for i, j in g.edges:
        if i in side and j in swap:
            j = swap[j]
        elif j in side and i in swap:
            i = swap[i]
        es.append((i, j))
    return make_graph(g.n, es)


def family(kind: str, n: int) -> Graph:
    if n < 1:
        raise ValidationError(f"family size must be positive, got {n}")
    if kind == "complete":
        return make_graph(n, combinations(range(1, n + 1), 2))
    if kind == "cycle":
        if n < 3:
            raise ValidationError(f"a cycle needs at least 3 vertices, got {n}")
        return make_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])
    if kind == "path":
        return make_graph(n, [(i, i + 1) for i in range(1, n)])
    if kind == "star":
        return make_graph(n, [(1, i) for i in range(2, n + 1)])
    raise ValidationError(f"unknown family {kind!r}; expected complete, cycle, path or star")


def random_graph(n: int, p: float = 0.5, seed=None) -> Graph:
    rng = random.Random(seed)
    return make_graph(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])


def random_connected_graph(n: int, p: float = 0.5, seed=None) -> Graph:
    """Rejection-sample ``random_graph`` until connected."""
    rng = random.Random(seed)
    while True:
        g = random_graph(n, p, rng.random())
        if is_connected(g):
            return g


def random_tree(n: int, seed=None) -> Graph:
    """Uniform labeled tree from a random Pruefer sequence."""
    if n <= 2:
        return family("path", n)
    rng = random.Random(seed)
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    es = []
    for x in seq:
        leaf = min(v for v in range(1, n + 1) if degree[v] == 1)
        es.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(1, n + 1) if degree[v] == 1)
    es.append((u, w))
    return make_graph(n, es)


def all_graphs(n: int):
    """Every labeled simple graph on 1..n."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(pairs[k] for k in range(len(pairs)) if mask >> k & 1))
