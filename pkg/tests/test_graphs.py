import warnings

import pytest
from hypothesis import given, strategies as st

from autbounds.graphs import (
    Graph,
    GraphParseError,
    SizeLimitError,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    degree_stats,
    generate_named,
    is_connected,
    parse_edgelist,
    parse_graph6,
    path_graph,
    petersen_graph,
    star_graph,
    write_graph6,
)
from fractions import Fraction

from helpers import graphs


# Reference strings below were cross-checked against the networkx graph6
# codec for the same labeled graphs.
REFERENCE_G6 = {
    "@": Graph(1, (0,)),
    "A_": complete_graph(2),
    "A?": Graph(2, (0, 0)),
    "C~": complete_graph(4),
    "Cl": cycle_graph(4),
    "Dhc": cycle_graph(5),
    "Bg": path_graph(3),
    "Cs": star_graph(3),
    "D]o": complete_bipartite_graph(2, 3),
    "IheA@GUAo": petersen_graph(),
}


def test_parse_graph6_reference_strings():
    for text, expected in REFERENCE_G6.items():
        assert parse_graph6(text) == expected


def test_write_graph6_reference_strings():
    for text, g in REFERENCE_G6.items():
        assert write_graph6(g) == text


def test_k4_shape():
    g = parse_graph6("C~")
    assert g.n == 4 and g.e == 6
    assert all(g.has_edge(u, v) for u in range(4) for v in range(4) if u != v)


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_graph6_invalid_byte_offset():
    with pytest.raises(GraphParseError) as exc:
        parse_graph6("C\x19")
    assert exc.value.offset == 1


def test_graph6_truncated():
    with pytest.raises(GraphParseError, match="truncated"):
        parse_graph6("D")  # n=5 needs two data bytes


def test_graph6_trailing_garbage():
    with pytest.raises(GraphParseError, match="trailing garbage") as exc:
        parse_graph6("C~~")
    assert exc.value.offset == 2


def test_graph6_nonzero_padding():
    # K_2 uses one data byte with 5 padding bits; force one of them on.
    with pytest.raises(GraphParseError, match="padding"):
        parse_graph6("A" + chr(63 + 0b100001))


def test_graph6_cap():
    with pytest.raises(SizeLimitError):
        parse_graph6("~" + chr(63) + chr(65) + chr(63))  # n = 128


def test_graph6_long_form_roundtrip():
    g = path_graph(63)
    s = write_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s, cap=70) == g


def test_parse_edgelist_path():
    g = parse_edgelist("3\n0 1\n1 2")
    assert g == path_graph(3)


def test_parse_edgelist_k4():
    g = parse_edgelist("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3")
    assert g == complete_graph(4)


def test_parse_edgelist_loop_rejected():
    with pytest.raises(GraphParseError, match="loop"):
        parse_edgelist("2\n0 0")


def test_parse_edgelist_range_rejected():
    with pytest.raises(GraphParseError, match="out of range"):
        parse_edgelist("2\n0 5")


def test_parse_edgelist_duplicate_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = parse_edgelist("3\n0 1\n0 1\n1 2")
    assert g == path_graph(3)
    assert any("duplicate" in str(w.message) for w in caught)


def test_degree_stats_k4():
    s = degree_stats(complete_graph(4))
    assert s.degrees == (3, 3, 3, 3)
    assert s.delta_max == s.delta_min == 3
    assert s.d_avg == 3


def test_degree_stats_star():
    s = degree_stats(star_graph(3))
    assert s.delta_max == 3 and s.delta_min == 1
    assert s.d_avg == Fraction(6, 4)


def test_degree_stats_c5():
    s = degree_stats(cycle_graph(5))
    assert s.delta_max == s.delta_min == 2 and s.d_avg == 2


def test_is_connected():
    assert is_connected(complete_graph(4))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1, (0,)))


def test_generate_named():
    assert generate_named("complete", 4) == complete_graph(4)
    kb = generate_named("complete_bipartite", 2, 3)
    assert kb.n == 5 and kb.e == 6
    pet = generate_named("petersen")
    assert pet.n == 10 and pet.e == 15
    assert set(pet.degrees) == {3}
    assert is_connected(pet)


def test_generate_named_rejects():
    with pytest.raises(ValueError):
        generate_named("complete", 0)
    with pytest.raises(ValueError):
        generate_named("cycle", 2)
    with pytest.raises(ValueError):
        generate_named("mystery", 3)
    with pytest.raises(ValueError):
        generate_named("petersen", 5)


def test_complete_family_invariants():
    for n in range(1, 11):
        g = complete_graph(n)
        assert g.e == n * (n - 1) // 2
        assert is_connected(g)


def test_roundtrip_corpus(corpus7):
    for graphs_n in corpus7.values():
        for g in graphs_n:
            assert parse_graph6(write_graph6(g)) == g


def test_graph6_non_ascii_rejected():
    with pytest.raises(GraphParseError, match="non-ASCII") as exc:
        parse_graph6("Cé")
    assert exc.value.offset == 1


@given(graphs(max_n=12))
def test_roundtrip_random(g):
    assert parse_graph6(write_graph6(g)) == g


@given(graphs(max_n=12))
def test_degree_sum_is_twice_edges(g):
    assert sum(g.degrees) == 2 * g.e


@given(graphs(max_n=10))
def test_roundtrip_against_networkx(g):
    nx = pytest.importorskip("networkx")
    s = write_graph6(g)
    G = nx.from_graph6_bytes(s.encode())
    assert G.number_of_nodes() == g.n
    assert {frozenset(e) for e in G.edges()} == {frozenset(e) for e in g.edges()}


def test_graph_validation():
    with pytest.raises(ValueError, match="loop"):
        Graph(2, (1, 2))
    with pytest.raises(ValueError, match="asymmetric"):
        Graph(2, (2, 0))
    with pytest.raises(ValueError):
        Graph(0, ())


def test_complement_and_relabel():
    g = path_graph(3)
    assert g.complement() == Graph.from_edges(3, [(0, 2)])
    assert g.relabel((2, 1, 0)) == path_graph(3)
    assert g.relabel((1, 0, 2)) == Graph.from_edges(3, [(0, 1), (0, 2)])
