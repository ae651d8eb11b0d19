import random

import pytest
from hypothesis import given, settings

from gzonotope import IntPolynomial as P, ValidationError, make_graph
from gzonotope.chromatic import acyclic_count
from gzonotope.graph import family, random_connected_graph, random_tree, wedge, whitney_twist
from gzonotope.qsym import chi_q_eval
from gzonotope.zonotope import (
    antipode,
    eulerian_poly,
    eulerian_poly_brute,
    f_poly_cycle_closed,
    f_poly_flats,
    f_poly_main,
    f_vector,
    zeta_q_of_antipode,
)

from test_graph import graphs

q = P.x("q")


def antipode_set(g):
    return {(t.coefficient, t.flat_edges) for t in antipode(g).terms}


def test_f_poly_flats_examples():
    assert f_poly_flats(family("complete", 3)) == P([6, 6, 1])
    assert f_poly_flats(family("cycle", 4)) == P([14, 24, 12, 1])
    for n in range(1, 8):
        assert f_poly_flats(family("path", n)) == (q + 2) ** (n - 1)


def test_f_poly_main_examples(example_graph):
    assert f_poly_main(example_graph) == P([12, 18, 8, 1])
    assert f_poly_main(family("complete", 2)) == P([2, 1])
    assert f_poly_main(family("complete", 4)) == P([24, 36, 14, 1])


def test_antipode_examples():
    fs = frozenset
    assert antipode_set(make_graph(1)) == {(-1, fs())}
    assert antipode_set(family("complete", 2)) == {(2, fs()), (-1, fs({(1, 2)}))}
    k3 = family("complete", 3)
    assert antipode_set(k3) == {
        (-6, fs()),
        (2, fs({(1, 2)})),
        (2, fs({(1, 3)})),
        (2, fs({(2, 3)})),
        (-1, fs(k3.edges)),
    }


def test_zeta_of_antipode_examples(example_graph):
    assert zeta_q_of_antipode(family("complete", 2)) == P([2, -1])
    assert zeta_q_of_antipode(make_graph(1)) == P([-1])
    assert zeta_q_of_antipode(example_graph) == P([12, -18, 8, -1])


def test_f_vector_examples():
    assert f_vector(family("cycle", 4)) == [14, 24, 12, 1]
    assert f_vector(family("complete", 2)) == [2, 1]
    assert f_vector(make_graph(3)) == [1]


@pytest.mark.parametrize("n", range(3, 8))
def test_cycle_face_counts(n):
    from math import comb

    f = f_vector(family("cycle", n))
    for k in range(2, n + 1):
        assert f[n - k] == (2**k - 2) * comb(n, k)


def test_eulerian():
    assert eulerian_poly(1) == P([1])
    assert eulerian_poly(2) == P([1, 1])
    assert eulerian_poly(3) == P([1, 4, 1])
    assert eulerian_poly_brute(4) == P([1, 11, 11, 1])
    for n in range(1, 8):
        assert eulerian_poly(n) == eulerian_poly_brute(n)
    with pytest.raises(ValidationError):
        eulerian_poly(0)


def test_cycle_closed_form():
    assert f_poly_cycle_closed(4) == P([14, 24, 12, 1])
    assert f_poly_cycle_closed(3) == P([6, 6, 1]) == f_poly_flats(family("complete", 3))
    assert f_poly_cycle_closed(5) == f_poly_flats(family("cycle", 5))
    with pytest.raises(ValidationError):
        f_poly_cycle_closed(2)


@pytest.mark.parametrize("n", range(2, 7))
def test_permutohedron(n):
    assert f_poly_flats(family("complete", n)) == eulerian_poly(n).shift(1)


def test_antipode_signs_and_counts():
    g = family("cycle", 5)
    for t in antipode(g).terms:
        assert t.coefficient != 0
        assert (t.coefficient > 0) == ((g.n - t.rank) % 2 == 0)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_route_equality_and_antipode(g):
    f = f_poly_flats(g)
    assert f == f_poly_main(g)
    s = zeta_q_of_antipode(g)
    assert s == chi_q_eval(g, q, -1)
    assert s.negate_var() * (-1) ** g.n == f
    assert f[0] == acyclic_count(g)


@pytest.mark.parametrize("seed", range(10))
def test_top_face_connected(seed):
    g = random_connected_graph(6, 0.4, seed)
    f = f_poly_flats(g)
    assert f.degree == 5 and f[5] == 1
    assert all(c > 0 for c in f)


@pytest.mark.parametrize("seed", range(10))
def test_wedge_multiplicative(seed):
    rng = random.Random(seed)
    g1 = random_connected_graph(rng.randint(1, 4), 0.6, seed)
    g2 = random_connected_graph(rng.randint(1, 4), 0.6, seed + 100)
    w = wedge(g1, rng.randint(1, g1.n), g2, rng.randint(1, g2.n))
    assert f_poly_flats(w) == f_poly_flats(g1) * f_poly_flats(g2)


@pytest.mark.parametrize("seed", range(10))
def test_trees_are_cubes(seed):
    t = random_tree(8, seed)
    assert f_poly_flats(t) == (q + 2) ** 7


def test_twist_invariance():
    # two 4-cycles sharing the 2-cut {1,2}: twisting one side keeps the matroid
    g = make_graph(6, [(1, 3), (3, 4), (2, 4), (1, 5), (5, 6), (2, 6), (1, 2)])
    t = whitney_twist(g, 1, 2, {3, 4})
    assert t != g
    assert f_poly_flats(t) == f_poly_flats(g)
