from itertools import combinations, permutations

import pytest

from gzonotope import make_graph
from gzonotope.graph import Graph, components, induced


@pytest.fixture
def example_graph():
    """Triangle 123 with the pendant edge 34."""
    return make_graph(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


def canonical_form(g: Graph) -> tuple:
    """Brute-force isomorphism invariant: lexicographically least relabeled edge list."""
    best = None
    for perm in permutations(range(1, g.n + 1)):
        es = tuple(sorted(tuple(sorted((perm[i - 1], perm[j - 1]))) for i, j in g.edges))
        if best is None or es < best:
            best = es
    return (g.n, best)


def ordered_set_partitions_brute(vs):
    """Set compositions of ``vs`` by choosing each block as a combination."""
    vs = tuple(vs)
    if not vs:
        yield ()
        return
    for size in range(1, len(vs) + 1):
        for block in combinations(vs, size):
            rest = tuple(v for v in vs if v not in block)
            for tail in ordered_set_partitions_brute(rest):
                yield (block,) + tail


def induced_rank_brute(g: Graph, block) -> int:
    h = induced(g, block)
    return h.n - len(components(h))


def zeta_alpha_brute(g: Graph, alpha) -> list[int]:
    """Coefficient list of (zeta_q)_alpha straight from its defining sum."""
    out = [0] * g.n
    for comp in ordered_set_partitions_brute(range(1, g.n + 1)):
        if tuple(len(b) for b in comp) == tuple(alpha):
            out[sum(induced_rank_brute(g, b) for b in comp)] += 1
    while out and out[-1] == 0:
        out.pop()
    return out


def pytest_terminal_summary(terminalreporter):
    reports = [
        r
        for key in ("passed", "failed")
        for r in terminalreporter.stats.get(key, [])
        if getattr(r, "when", None) == "call" and "test_acceptance.py" in r.nodeid
    ]
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(reports, key=lambda r: r.nodeid):
        name = r.nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if r.passed else 'FAIL'}  {name}")
