"""Shared strategies and naive oracles for the test suite.

The oracles here deliberately stay brute force and independent of the
package's algorithms: orbits come from enumerating all n! permutations, and
random graphs are drawn bit by bit.
"""

from itertools import permutations

from hypothesis import strategies as st

from autbounds.graphs import Graph


def is_automorphism(g: Graph, p) -> bool:
    return all(g.has_edge(p[u], p[v]) for u, v in g.edges())


def naive_orbits(g: Graph):
    """Vertex orbits by explicit enumeration of all automorphisms (n <= 8)."""
    autos = [p for p in permutations(range(g.n)) if is_automorphism(g, p)]
    orbits = []
    seen = set()
    for v in range(g.n):
        if v in seen:
            continue
        orb = sorted({p[v] for p in autos})
        seen.update(orb)
        orbits.append(tuple(orb))
    return tuple(orbits)


def graph_from_bits(n: int, bitcode: int) -> Graph:
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (bitcode >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    bitcode = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_bits(n, bitcode)


@st.composite
def connected_graphs_st(draw, min_n=2, max_n=8):
    """Random graph unioned with a random spanning path, so always connected."""
    n = draw(st.integers(min_n, max_n))
    bitcode = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    g = graph_from_bits(n, bitcode)
    order = draw(st.permutations(list(range(n))))
    rows = list(g.rows)
    for a, b in zip(order, order[1:]):
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(n, tuple(rows))


@st.composite
def random_trees(draw, min_n=2, max_n=10):
    """Uniform-ish random tree: each vertex attaches to an earlier one."""
    n = draw(st.integers(min_n, max_n))
    edges = []
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


@st.composite
def permutations_of(draw, n: int):
    return tuple(draw(st.permutations(list(range(n)))))
