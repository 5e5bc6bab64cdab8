import pytest
from hypothesis import given, strategies as st

from autbounds.automorphisms import aut_order, aut_order_naive, orbit_size
from autbounds.graphs import (
    Graph,
    SizeLimitError,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)

from helpers import graphs, is_automorphism, naive_orbits


def test_k4():
    res = aut_order(complete_graph(4))
    assert res.order == 24
    assert res.orbits == ((0, 1, 2, 3),)


def test_k23():
    res = aut_order(complete_bipartite_graph(2, 3))
    assert res.order == 12
    assert sorted(len(o) for o in res.orbits) == [2, 3]


def test_c5():
    res = aut_order(cycle_graph(5))
    assert res.order == 10 == aut_order_naive(cycle_graph(5))
    assert res.orbits == ((0, 1, 2, 3, 4),)


def test_single_vertex():
    res = aut_order(Graph(1, (0,)))
    assert res.order == 1 and res.orbits == ((0,),) and res.generators == ()


def test_petersen():
    # cross-checked against an independent matcher-based count
    assert aut_order(petersen_graph()).order == 120


def test_naive_examples():
    assert aut_order_naive(path_graph(3)) == 2
    assert aut_order_naive(complete_bipartite_graph(3, 3)) == 72
    assert aut_order_naive(Graph(1, (0,))) == 1


def test_naive_refuses_large():
    with pytest.raises(SizeLimitError):
        aut_order_naive(complete_graph(9))


def test_orbit_size_examples():
    assert orbit_size(complete_graph(4), 2) == 4
    k23 = complete_bipartite_graph(2, 3)
    assert orbit_size(k23, 0) == 2 and orbit_size(k23, 3) == 3
    assert orbit_size(path_graph(4), 0) == 2
    with pytest.raises(ValueError):
        orbit_size(path_graph(4), 9)


def test_orbits_match_naive(corpus6):
    for n in (4, 5):
        for g in corpus6[n]:
            assert aut_order(g).orbits == naive_orbits(g)


def test_exhaustive_cross_validation_small(corpus6):
    for n in range(1, 6):
        for g in corpus6[n]:
            assert aut_order(g).order == aut_order_naive(g)


def test_generators_are_automorphisms():
    for g in (complete_bipartite_graph(2, 3), petersen_graph(), cycle_graph(6)):
        res = aut_order(g)
        for p in res.generators:
            assert is_automorphism(g, p)


@given(graphs(max_n=7))
def test_orbit_structure(g):
    res = aut_order(g)
    assert sum(len(o) for o in res.orbits) == g.n
    for orb in res.orbits:
        assert res.order % len(orb) == 0


@given(graphs(max_n=7), st.data())
def test_relabel_invariance(g, data):
    perm = tuple(data.draw(st.permutations(list(range(g.n)))))
    assert aut_order(g.relabel(perm)).order == aut_order(g).order


@given(graphs(max_n=7))
def test_complement_invariance(g):
    assert aut_order(g.complement()).order == aut_order(g).order


@given(graphs(min_n=2, max_n=6))
def test_matches_naive_random(g):
    assert aut_order(g).order == aut_order_naive(g)


def test_identity_iff_trivial(corpus6):
    for g in corpus6[6]:
        res = aut_order(g)
        trivial = all(len(o) == 1 for o in res.orbits) and not res.generators
        assert (res.order == 1) == trivial


# Strongly regular graphs where degree refinement alone cannot split any cell;
# the classical orders pin the backtracking search.

def rook_graph_4x4():
    edges = []
    for i in range(4):
        for j in range(4):
            v = 4 * i + j
            edges += [(v, 4 * i + jj) for jj in range(j + 1, 4)]
            edges += [(v, 4 * ii + j) for ii in range(i + 1, 4)]
    return Graph.from_edges(16, edges)


def shrikhande_graph():
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = {tuple(sorted((4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4)))
             for a in range(4) for b in range(4) for da, db in conn}
    return Graph.from_edges(16, edges)


def paley_graph(q):
    residues = {(x * x) % q for x in range(1, q)}
    return Graph.from_edges(q, [(u, v) for u in range(q) for v in range(u + 1, q)
                                if (v - u) % q in residues])


def test_rook_4x4():
    assert aut_order(rook_graph_4x4()).order == 1152  # 2 * (4!)^2


def test_shrikhande():
    # same degree sequence and spectrum as the rook graph, different group
    assert aut_order(shrikhande_graph()).order == 192


def test_paley_graphs():
    assert aut_order(paley_graph(13)).order == 78    # 13 * 12 / 2
    assert aut_order(paley_graph(17)).order == 136   # 17 * 16 / 2


def test_large_complete_graph_exact_factorial():
    from math import factorial
    assert aut_order(complete_graph(24)).order == factorial(24)
