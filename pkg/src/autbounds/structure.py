"""Structural parameters behind the conditional bounds: exact minimum
vertex-disjoint path cover, Hamiltonian-path existence, and the smallest m
for which the graph contains no induced star with m leaves.

The path cover runs a two-stage bitmask DP: first, for every vertex subset,
the possible endpoints of a single path covering it; then a set-cover DP over
disjoint path-shaped subsets.  Exact and exponential, hence the hard cap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, SizeLimitError, bits

STRUCTURE_VERTEX_LIMIT = 20


@dataclass(frozen=True)
class PathCoverResult:
    """Minimum number of vertex-disjoint covering paths plus one witness."""

    p: int
    witness: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class StarFreeParam:
    """Smallest m >= 2 with no induced star of m leaves.

    The witness is a vertex together with an independent set of m_min - 1 of
    its neighbours; it is None only for edgeless graphs, where no vertex has a
    neighbour at all.
    """

    m_min: int
    witness_vertex: int | None
    witness_set: tuple[int, ...] | None


def _check_size(g: Graph):
    if g.n > STRUCTURE_VERTEX_LIMIT:
        raise SizeLimitError(
            f"exact bitmask DP is capped at n <= {STRUCTURE_VERTEX_LIMIT}, got n={g.n}")


def _path_endpoints(g: Graph) -> list[int]:
    """end[mask] = bitmask of vertices at which some path covering exactly
    ``mask`` can end; single vertices count as trivial paths."""
    n = g.n
    rows = g.rows
    end = [0] * (1 << n)
    for v in range(n):
        end[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        em = end[mask]
        if not em:
            continue
        for v in bits(em):
            for w in bits(rows[v] & ~mask):
                end[mask | (1 << w)] |= 1 << w
    return end


def _extract_path(g: Graph, end: list[int], mask: int) -> tuple[int, ...]:
    v = next(bits(end[mask]))
    path = [v]
    mask ^= 1 << v
    while mask:
        v = next(w for w in bits(end[mask]) if g.has_edge(w, path[-1]))
        path.append(v)
        mask ^= 1 << v
    return tuple(path)


def path_cover_number(g: Graph) -> PathCoverResult:
    """Exact minimum vertex-disjoint path cover with a verifying witness."""
    _check_size(g)
    n = g.n
    full = (1 << n) - 1
    end = _path_endpoints(g)
    INF = n + 1
    cover = [INF] * (full + 1)
    choice = [0] * (full + 1)
    cover[0] = 0
    for mask in range(1, full + 1):
        low = mask & -mask
        sub = mask
        while sub:
            if (sub & low) and end[sub]:
                c = cover[mask ^ sub] + 1
                if c < cover[mask]:
                    cover[mask] = c
                    choice[mask] = sub
            sub = (sub - 1) & mask
    paths = []
    mask = full
    while mask:
        sub = choice[mask]
        paths.append(_extract_path(g, end, sub))
        mask ^= sub
    return PathCoverResult(cover[full], tuple(paths))


def has_hamiltonian_path(g: Graph) -> bool:
    """True iff a single path visits every vertex; agrees with p == 1."""
    _check_size(g)
    end = _path_endpoints(g)
    return end[(1 << g.n) - 1] != 0


def _max_independent_set(rows, mask: int) -> tuple[int, int]:
    """Size and one witness mask of a maximum independent set inside mask."""
    if not mask:
        return 0, 0
    v = (mask & -mask).bit_length() - 1
    s_out, w_out = _max_independent_set(rows, mask ^ (1 << v))
    s_in, w_in = _max_independent_set(rows, mask & ~rows[v] & ~(1 << v))
    s_in += 1
    w_in |= 1 << v
    return (s_in, w_in) if s_in > s_out else (s_out, w_out)


def star_free_parameter(g: Graph) -> StarFreeParam:
    """m_min = 2 + the largest independent set found inside any open
    neighbourhood minus 1; i.e. one more than the biggest induced star."""
    _check_size(g)
    best = 0
    best_vertex = None
    best_mask = 0
    for v in range(g.n):
        size, wmask = _max_independent_set(g.rows, g.rows[v])
        if size > best:
            best, best_vertex, best_mask = size, v, wmask
    if best == 0:
        return StarFreeParam(2, None, None)
    return StarFreeParam(max(2, best + 1), best_vertex, tuple(bits(best_mask)))
