"""Brute-force face counts of the graphical zonotope from covectors.

Every point x of R^n induces the ordered set partition of V by the sorted
distinct values of its coordinates, and the sign vector of x on the edge
hyperplanes only depends on that ordered partition.  Sweeping all ordered
set partitions therefore produces every covector; deduplicating and
bucketing by the rank of the zero set gives face counts by dimension.
"""

from __future__ import annotations

from math import comb
from typing import Iterator

import numpy as np

from .errors import BudgetError
from .graph import Graph, graph_rank, make_graph

ORACLE_LIMIT = 9
SIGN_CHARS = {0: "0", 1: "+", 2: "-"}


def fubini(n: int) -> int:
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


def _check_budget(n: int, limit: int | None) -> None:
    limit = ORACLE_LIMIT if limit is None else limit
    if n > limit:
        raise BudgetError(f"{fubini(n)} ordered set partitions of {n} vertices; limit is n <= {limit}")


def ordered_set_partitions(n: int, limit: int | None = None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every ordered set partition of 1..n exactly once.

    The first block ranges over nonempty subsets of the remaining vertices
    in increasing bitmask order.
    """
    _check_budget(n, limit)

    def rec(rest: int):
        if not rest:
            yield ()
            return
        sub = rest
        subs = []
        while sub:
            subs.append(sub)
            sub = (sub - 1) & rest
        for s in reversed(subs):
            block = tuple(v + 1 for v in range(n) if s >> v & 1)
            for tail in rec(rest & ~s):
                yield (block,) + tail

    yield from rec((1 << n) - 1)


def covector_of(g: Graph, p) -> str:
    """Sign string over g's edges: edge (i, j) gets sign(level(i) - level(j))."""
    level = {v: k for k, block in enumerate(p) for v in block}
    out = []
    for i, j in g.edges:
        diff = level[i] - level[j]
        out.append("+" if diff > 0 else "-" if diff < 0 else "0")
    return "".join(out)


def _weak_orders(n: int) -> np.ndarray:
    """Level arrays (rows) of all ordered set partitions of n vertices.

    Built by inserting vertices one at a time, either into an existing
    level or as a new level at any position.
    """
    levels = np.zeros((1, 1), dtype=np.int8)
    nblocks = np.ones(1, dtype=np.int8)
    for m in range(1, n):
        pieces, counts = [], []
        for t in range(2 * m + 1):
            # t < k: join level t; t >= k: new level at position t - k
            join = t < nblocks
            new = (t >= nblocks) & (t - nblocks <= nblocks)
            sel = join | new
            if not sel.any():
                continue
            lv, kb, jn = levels[sel], nblocks[sel], join[sel]
            pos = (t - kb).astype(np.int8)
            col = np.where(jn, t, pos).astype(np.int8)
            shifted = np.where(~jn[:, None] & (lv >= pos[:, None]), lv + 1, lv).astype(np.int8)
            pieces.append(np.hstack([shifted, col[:, None]]))
            counts.append(np.where(jn, kb, kb + 1).astype(np.int8))
        levels = np.vstack(pieces)
        nblocks = np.concatenate(counts)
    return levels


_EDGES_PER_WORD = 31


def _covector_codes(g: Graph, limit: int | None) -> np.ndarray:
    """Distinct covectors as rows of int64 words, two bits per edge
    (0 -> 0, + -> 1, - -> 2), 31 edges per word."""
    _check_budget(g.n, limit)
    words = max(1, -(-g.m // _EDGES_PER_WORD))
    if g.m == 0:
        return np.zeros((1, 1), dtype=np.int64)
    levels = _weak_orders(g.n)
    codes = np.zeros((len(levels), words), dtype=np.int64)
    for k, (i, j) in enumerate(g.edges):
        diff = levels[:, i - 1].astype(np.int16) - levels[:, j - 1]
        sym = np.where(diff > 0, 1, np.where(diff < 0, 2, 0)).astype(np.int64)
        w, b = divmod(k, _EDGES_PER_WORD)
        codes[:, w] |= sym << (2 * b)
    if words == 1:
        return np.unique(codes[:, 0])[:, None]
    rows = np.ascontiguousarray(codes).view(np.dtype((np.void, 8 * words)))[:, 0]
    return np.unique(rows).view(np.int64).reshape(-1, words)


def _edge_symbols(codes: np.ndarray, k: int) -> np.ndarray:
    w, b = divmod(k, _EDGES_PER_WORD)
    return (codes[:, w] >> (2 * b)) & 3


def _decode(g: Graph, row) -> str:
    return "".join(
        SIGN_CHARS[(int(row[k // _EDGES_PER_WORD]) >> (2 * (k % _EDGES_PER_WORD))) & 3]
        for k in range(g.m)
    )


def enumerate_covectors(g: Graph, limit: int | None = None) -> set[str]:
    return {_decode(g, row) for row in _covector_codes(g, limit)}


def f_vector_oracle(g: Graph, limit: int | None = None) -> list[int]:
    """Face counts by dimension; a covector's face has dimension equal to the
    rank of its zero edges."""
    codes = _covector_codes(g, limit)
    zero = np.zeros(len(codes), dtype=np.uint64)
    for k in range(g.m):
        zero |= (_edge_symbols(codes, k) == 0).astype(np.uint64) << np.uint64(k)
    masks, counts = np.unique(zero, return_counts=True)
    out = [0] * (graph_rank(g) + 1)
    for mask, c in zip(masks.tolist(), counts.tolist()):
        sub = make_graph(g.n, [e for k, e in enumerate(g.edges) if mask >> k & 1])
        out[graph_rank(sub)] += c
    return out


def covector_count(g: Graph, limit: int | None = None) -> int:
    return len(_covector_codes(g, limit))
