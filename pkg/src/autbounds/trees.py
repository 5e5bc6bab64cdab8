"""Spanning trees: greedy construction, exact tree automorphism counts, and
the product-of-degrees estimates used by the embedding bounds.

The greedy construction starts from the full edge star of a chosen root and
repeatedly expands an eligible leaf (one with at least one host edge leaving
the current tree) by all of its outward edges, until no leaf reaches outside.
On a connected host that always spans, which is asserted at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb, factorial

from .graphs import Graph, SizeLimitError, bits, is_connected

ENUM_VERTEX_LIMIT = 7  # all_spanning_trees refuses larger hosts unless capped

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SpanningTree:
    """Tree on the host's vertex set: exactly n-1 edges, acyclic, connected."""

    host_n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        n = self.host_n
        if n < 1:
            raise ValueError("tree needs at least one vertex")
        if len(self.edges) != n - 1:
            raise ValueError(f"a spanning tree on {n} vertices needs {n - 1} edges")
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            if not (0 <= u < v < n):
                raise ValueError(f"bad edge {(u, v)}")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError(f"edge {(u, v)} closes a cycle")
            parent[ru] = rv

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.host_n
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return tuple(degs)

    @property
    def delta_max(self) -> int:
        return max(self.degrees)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def spans(self, g: Graph) -> bool:
        return self.host_n == g.n and all(g.has_edge(u, v) for u, v in self.edges)

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.host_n, self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.host_n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class GreedyTree:
    """Greedy spanning tree plus its construction record.

    ``sequence`` is the expanded-vertex order v_0..v_s; ``step_edges[i]`` is
    the edge set added when v_i was expanded (step 0 is the root star).
    """

    tree: SpanningTree
    sequence: tuple[int, ...]
    step_edges: tuple[frozenset[Edge], ...]

    @property
    def root(self) -> int:
        return self.sequence[0]

    def step_sizes(self) -> tuple[int, ...]:
        """Number of edges added at each expansion step after the root star."""
        return tuple(len(se) for se in self.step_edges[1:])


def greedy_spanning_tree(g: Graph, v0: int, tie_break: str = "lowest") -> GreedyTree:
    """Grow the greedy tree from v0, expanding one eligible leaf per step.

    ``tie_break`` picks among eligible leaves: "lowest" (default) or
    "highest" vertex index.  Every choice yields a valid greedy tree.
    """
    if not 0 <= v0 < g.n:
        raise ValueError(f"start vertex {v0} out of range")
    if not is_connected(g):
        raise ValueError("greedy spanning tree needs a connected host graph")
    if tie_break not in ("lowest", "highest"):
        raise ValueError(f"unknown tie_break policy {tie_break!r}")
    pick = min if tie_break == "lowest" else max

    rows = g.rows
    full = (1 << g.n) - 1
    covered = (1 << v0) | rows[v0]
    unexpanded = rows[v0]  # tree leaves that may still have outward edges
    sequence = [v0]
    step_edges = [frozenset(_norm_edge(v0, w) for w in bits(rows[v0]))]
    edges = set(step_edges[0])
    while True:
        eligible = [v for v in bits(unexpanded) if rows[v] & ~covered]
        if not eligible:
            break
        v = pick(eligible)
        new = rows[v] & ~covered
        step = frozenset(_norm_edge(v, w) for w in bits(new))
        edges |= step
        step_edges.append(step)
        sequence.append(v)
        covered |= new
        unexpanded = (unexpanded & ~(1 << v)) | new
    assert covered == full, "connected host must be spanned"
    tree = SpanningTree(g.n, frozenset(edges))
    return GreedyTree(tree, tuple(sequence), tuple(step_edges))


def best_greedy_tree(g: Graph, v0: int) -> tuple[GreedyTree, int]:
    """Greedy tree from v0 minimising the product of (step size)! over all
    eligible-leaf choice sequences.  Returns (tree, that product)."""
    if not 0 <= v0 < g.n:
        raise ValueError(f"start vertex {v0} out of range")
    if not is_connected(g):
        raise ValueError("greedy spanning tree needs a connected host graph")
    rows = g.rows
    full = (1 << g.n) - 1
    memo: dict[tuple[int, int], tuple[int, int | None]] = {}

    def rec(covered: int, unexpanded: int) -> tuple[int, int | None]:
        key = (covered, unexpanded)
        if key in memo:
            return memo[key]
        eligible = [v for v in bits(unexpanded) if rows[v] & ~covered]
        if not eligible:
            assert covered == full, "connected host must be spanned"
            result = (1, None)
        else:
            best_val, best_v = None, None
            for v in eligible:
                new = rows[v] & ~covered
                sub, _ = rec(covered | new, (unexpanded & ~(1 << v)) | new)
                val = factorial(new.bit_count()) * sub
                if best_val is None or val < best_val:
                    best_val, best_v = val, v
            result = (best_val, best_v)
        memo[key] = result
        return result

    covered = (1 << v0) | rows[v0]
    unexpanded = rows[v0]
    product, _ = rec(covered, unexpanded)

    # Replay the winning choices to materialise the tree.
    sequence = [v0]
    step_edges = [frozenset(_norm_edge(v0, w) for w in bits(rows[v0]))]
    edges = set(step_edges[0])
    while True:
        _, choice = memo[(covered, unexpanded)]
        if choice is None:
            break
        new = rows[choice] & ~covered
        step = frozenset(_norm_edge(choice, w) for w in bits(new))
        edges |= step
        step_edges.append(step)
        sequence.append(choice)
        covered |= new
        unexpanded = (unexpanded & ~(1 << choice)) | new
    gt = GreedyTree(SpanningTree(g.n, frozenset(edges)), tuple(sequence), tuple(step_edges))
    return gt, product


def verify_greedy_tree(g: Graph, gt: GreedyTree) -> None:
    """Raise ValueError unless gt is a valid greedy construction record on g."""
    n = g.n
    if gt.tree.host_n != n:
        raise ValueError("tree host size differs from graph")
    if not gt.tree.spans(g):
        raise ValueError("tree uses an edge absent from the host")
    if len(gt.sequence) != len(gt.step_edges):
        raise ValueError("sequence and step records differ in length")
    v0 = gt.sequence[0]
    root_star = frozenset(_norm_edge(v0, w) for w in bits(g.rows[v0]))
    if gt.step_edges[0] != root_star:
        raise ValueError("step 0 must be the full host star at the root")
    covered = (1 << v0) | g.rows[v0]
    expanded = 1 << v0
    for v, step in zip(gt.sequence[1:], gt.step_edges[1:]):
        if not step:
            raise ValueError(f"step at {v} added no edges")
        if not (covered >> v) & 1 or (expanded >> v) & 1:
            raise ValueError(f"expanded vertex {v} was not a leaf of the current tree")
        new = 0
        for a, b in step:
            w = b if a == v else a if b == v else None
            if w is None:
                raise ValueError(f"step edge {(a, b)} not incident to {v}")
            if (covered >> w) & 1:
                raise ValueError(f"step edge {(a, b)} does not leave the tree")
            new |= 1 << w
        if new != g.rows[v] & ~covered:
            raise ValueError(f"step at {v} must add every outward host edge")
        covered |= new
        expanded |= 1 << v
    if covered != (1 << n) - 1:
        raise ValueError("construction stopped before spanning")
    if frozenset().union(*gt.step_edges) != gt.tree.edges:
        raise ValueError("step edges do not reassemble the tree")
    # Every vertex except the root enters through exactly one step edge.
    if 1 + g.degree(v0) + sum(gt.step_sizes()) != n:
        raise ValueError("step sizes violate the degree-sum identity")


def bfs_tree(g: Graph, root: int) -> SpanningTree:
    """Breadth-first spanning tree with increasing-index neighbour order."""
    if not is_connected(g):
        raise ValueError("spanning tree needs a connected host graph")
    seen = 1 << root
    frontier = [root]
    edges = []
    while frontier:
        nxt = []
        for v in frontier:
            for w in bits(g.rows[v] & ~seen):
                seen |= 1 << w
                edges.append(_norm_edge(v, w))
                nxt.append(w)
        frontier = nxt
    return SpanningTree(g.n, frozenset(edges))


def dfs_tree(g: Graph, root: int) -> SpanningTree:
    """Depth-first spanning tree with increasing-index neighbour order."""
    if not is_connected(g):
        raise ValueError("spanning tree needs a connected host graph")
    seen = 1 << root
    edges = []
    stack = [(root, iter(bits(g.rows[root])))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if not (seen >> w) & 1:
                seen |= 1 << w
                edges.append(_norm_edge(v, w))
                stack.append((w, iter(bits(g.rows[w]))))
                break
        else:
            stack.pop()
    return SpanningTree(g.n, frozenset(edges))


# ---------------------------------------------------------------------------
# Exact tree automorphism counting via centroid-rooted canonical codes.
# The count at an internal node is the product of its children's counts times
# m! for every group of m mutually isomorphic child subtrees; a centroid edge
# joining two isomorphic halves doubles the total.
# ---------------------------------------------------------------------------

def _centroids(n: int, adj) -> list[int]:
    if n == 1:
        return [0]
    size = [1] * n
    order = []
    parent = [-1] * n
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                stack.append(w)
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best, cents = None, []
    for v in range(n):
        heaviest = n - size[v]
        for w in adj[v]:
            if w != parent[v]:
                heaviest = max(heaviest, size[w])
        if best is None or heaviest < best:
            best, cents = heaviest, [v]
        elif heaviest == best:
            cents.append(v)
    return cents


def _rooted_code_aut(root: int, banned: int, adj) -> tuple[tuple, int]:
    """Canonical code and automorphism count of the subtree at root, not
    crossing into ``banned``."""
    kids = []
    for w in adj[root]:
        if w != banned:
            kids.append(_rooted_code_aut(w, root, adj))
    kids.sort(key=lambda t: t[0])
    aut = 1
    run = 0
    for i, (code, sub_aut) in enumerate(kids):
        aut *= sub_aut
        run += 1
        if i + 1 == len(kids) or kids[i + 1][0] != code:
            aut *= factorial(run)
            run = 0
    return tuple(k[0] for k in kids), aut


def tree_aut_exact(t: SpanningTree) -> int:
    """Exact automorphism count of the tree as an abstract graph."""
    adj = t.adjacency()
    cents = _centroids(t.host_n, adj)
    if len(cents) == 1:
        return _rooted_code_aut(cents[0], -1, adj)[1]
    c1, c2 = cents
    code1, aut1 = _rooted_code_aut(c1, c2, adj)
    code2, aut2 = _rooted_code_aut(c2, c1, adj)
    return aut1 * aut2 * (2 if code1 == code2 else 1)


def tree_certificate(t: SpanningTree):
    """Hashable canonical form: equal certificates iff isomorphic trees."""
    adj = t.adjacency()
    cents = _centroids(t.host_n, adj)
    if len(cents) == 1:
        return (1, _rooted_code_aut(cents[0], -1, adj)[0])
    c1, c2 = cents
    code1 = _rooted_code_aut(c1, c2, adj)[0]
    code2 = _rooted_code_aut(c2, c1, adj)[0]
    return (2, tuple(sorted((code1, code2))))


def tree_aut_upper(t: SpanningTree) -> int:
    """Degree-product ceiling on the tree automorphism count:
    max degree times the product of (degree - 1)! over all vertices.

    Only valid for trees with an internal vertex (n >= 3): the single-edge
    tree has count 2 but product 1, the one boundary case below the formula.
    """
    if t.host_n < 2:
        raise ValueError("degree-product bound needs at least two vertices")
    prod = 1
    for d in t.degrees:
        prod *= factorial(d - 1)
    return t.delta_max * prod


def embedding_upper_fs(g: Graph) -> Fraction:
    """Ceiling on the number of spanning-tree copies in g: the product of all
    vertex degrees divided by the maximum degree, as an exact rational."""
    if g.n < 2 or not is_connected(g):
        raise ValueError("estimate needs a connected host with n >= 2")
    prod = 1
    for d in g.degrees:
        prod *= d
    return Fraction(prod, max(g.degrees))


def all_spanning_trees(g: Graph, cap: int | None = None) -> tuple[list[SpanningTree], bool]:
    """Every spanning tree exactly once via edge-subset enumeration.

    Returns (trees, truncated).  Hosts with more than 7 vertices are refused
    unless a cap is supplied, since the subset count explodes.
    """
    if not is_connected(g):
        raise ValueError("spanning trees need a connected host graph")
    if g.n > ENUM_VERTEX_LIMIT and cap is None:
        raise SizeLimitError(
            f"subset enumeration over {comb(g.e, g.n - 1)} candidates refused for "
            f"n={g.n} > {ENUM_VERTEX_LIMIT}; pass a cap to force it")
    n = g.n
    trees: list[SpanningTree] = []
    for subset in combinations(g.edges(), n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if not acyclic:
            continue
        trees.append(SpanningTree(n, frozenset(subset)))
        if cap is not None and len(trees) >= cap:
            return trees, True
    return trees, False


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees by the reduced-Laplacian determinant
    (integer-exact Bareiss elimination); the independent count oracle."""
    n = g.n
    if n == 1:
        return 1
    m = [[0] * (n - 1) for _ in range(n - 1)]
    for v in range(1, n):
        m[v - 1][v - 1] = g.degree(v)
        for w in bits(g.rows[v]):
            if w >= 1:
                m[v - 1][w - 1] -= 1
    prev = 1
    sign = 1
    size = n - 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[size - 1][size - 1]
