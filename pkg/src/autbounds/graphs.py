"""Immutable bit-row graphs, graph6/edge-list codecs, and named families.

Vertices are always 0..n-1.  Adjacency is one Python int per vertex whose set
bits are the neighbours; that keeps degree and neighbourhood queries single
popcounts, makes graphs hashable, and lets every algorithm downstream work on
plain integers.  The default vertex cap of 64 is a guard for the exponential
algorithms in this package, not a storage limit.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

DEFAULT_VERTEX_CAP = 64

_GRAPH6_HEADER = ">>graph6<<"


class GraphParseError(ValueError):
    """Malformed graph input; carries the offending byte offset when known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class SizeLimitError(ValueError):
    """Input exceeds a documented exact-computation size cap."""


def bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no multi-edges, vertices 0..n-1."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise ValueError("adjacency row count must equal n")
        for v, row in enumerate(self.rows):
            if row >> self.n:
                raise ValueError(f"row {v} mentions vertices >= n")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(self.rows):
            for w in bits(row):
                if not (self.rows[w] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge {u}-{v} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @cached_property
    def e(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u]) if u < v]

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full & ~r) & ~(1 << v) for v, r in enumerate(self.rows)))

    def relabel(self, perm) -> "Graph":
        """Image of the graph under the permutation v -> perm[v]."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            img = 0
            for w in bits(row):
                img |= 1 << perm[w]
            rows[perm[v]] = img
        return Graph(self.n, tuple(rows))


@dataclass(frozen=True)
class DegreeStats:
    """Per-vertex degrees plus max/min/average; the average is an exact rational."""

    degrees: tuple[int, ...]
    delta_max: int
    delta_min: int
    d_avg: Fraction


def degree_stats(g: Graph) -> DegreeStats:
    degs = g.degrees
    return DegreeStats(degs, max(degs), min(degs), Fraction(2 * g.e, g.n))


def is_connected(g: Graph) -> bool:
    """True iff one traversal from vertex 0 reaches all n vertices."""
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


# ---------------------------------------------------------------------------
# graph6 codec.  Format: printable bytes offset by 63; the vertex count first
# (one byte for n <= 62, '~' + 3 bytes for n <= 258047, '~~' + 6 bytes above),
# then the upper adjacency triangle column by column, packed 6 bits per byte,
# zero-padded to a byte boundary.
# ---------------------------------------------------------------------------

def _check_cap(n: int, cap: int):
    if n > cap:
        raise SizeLimitError(f"graph has {n} vertices, above the cap of {cap}")


def parse_graph6(text: str, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Decode one graph6 line (optionally prefixed with '>>graph6<<')."""
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(_GRAPH6_HEADER):
        line = line[len(_GRAPH6_HEADER):]
        base = len(_GRAPH6_HEADER)
    if not line:
        raise GraphParseError("empty graph6 input", offset=base)
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphParseError("non-ASCII byte in graph6 input",
                              offset=base + exc.start) from None

    def val(i: int) -> int:
        b = data[i]
        if not 63 <= b <= 126:
            raise GraphParseError(f"invalid graph6 byte {b!r}", offset=base + i)
        return b - 63

    pos = 0
    if val(0) == 63:  # '~': multi-byte vertex count
        if len(data) >= 2 and val(1) == 63:
            if len(data) < 8:
                raise GraphParseError("truncated 8-byte vertex count", offset=base + len(data))
            n = 0
            for i in range(2, 8):
                n = n << 6 | val(i)
            pos = 8
        else:
            if len(data) < 4:
                raise GraphParseError("truncated 4-byte vertex count", offset=base + len(data))
            n = val(1) << 12 | val(2) << 6 | val(3)
            pos = 4
    else:
        n = val(0)
        pos = 1
    if n < 1:
        raise GraphParseError("graph6 vertex count must be at least 1", offset=base)
    _check_cap(n, cap)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise GraphParseError("truncated adjacency bit section", offset=base + len(data))
    if len(data) - pos > nbytes:
        raise GraphParseError("trailing garbage after adjacency bits", offset=base + pos + nbytes)

    rows = [0] * n
    bit_idx = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for k in range(nbytes):
        chunk = val(pos + k)
        for shift in range(5, -1, -1):
            bit = (chunk >> shift) & 1
            if bit_idx < nbits:
                if bit:
                    i, j = pairs[bit_idx]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise GraphParseError("nonzero padding bits", offset=base + pos + k)
            bit_idx += 1
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    """Encode a graph as a plain graph6 line (no header)."""
    n = g.n
    out = []
    if n <= 62:
        out.append(n + 63)
    elif n <= 258047:
        out.append(126)
        out.extend(((n >> shift) & 63) + 63 for shift in (12, 6, 0))
    else:
        out.extend((126, 126))
        out.extend(((n >> shift) & 63) + 63 for shift in range(30, -1, -6))
    chunk = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            chunk = chunk << 1 | ((g.rows[i] >> j) & 1)
            filled += 1
            if filled == 6:
                out.append(chunk + 63)
                chunk = filled = 0
    if filled:
        out.append((chunk << (6 - filled)) + 63)
    return bytes(out).decode("ascii")


def parse_edgelist(text: str, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Decode the edge-list format: first line n, then one 'u v' pair per line.

    Blank lines and lines starting with '#' are skipped; duplicate edges are
    tolerated with a warning so hand-written inputs survive.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphParseError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphParseError(f"first line must be the vertex count, got {lines[0]!r}") from None
    if n < 1:
        raise GraphParseError("vertex count must be at least 1")
    _check_cap(n, cap)
    rows = [0] * n
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {ln!r}") from None
        if u == v:
            raise GraphParseError(f"loop edge {u} {v} not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge {u} {v} out of range for n={n}")
        if (rows[u] >> v) & 1:
            warnings.warn(f"duplicate edge {u} {v} ignored", stacklevel=2)
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Named families.
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_bipartite_graph(p: int, q: int) -> Graph:
    """K_{p,q} with part {0..p-1} against part {p..p+q-1}."""
    if p < 1 or q < 1:
        raise ValueError("both parts need at least one vertex")
    n = p + q
    left = (1 << p) - 1
    right = ((1 << n) - 1) ^ left
    return Graph(n, tuple(right if v < p else left for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: centre 0 joined to 1..leaves."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


_FAMILIES = {
    "complete": (complete_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
    "star": (star_graph, 1),
    "petersen": (petersen_graph, 0),
}


def generate_named(family: str, *params: int) -> Graph:
    """Canonical labeled instance of a named family (complete, cycle, ...)."""
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}")
    builder, arity = _FAMILIES[family]
    if len(params) != arity:
        raise ValueError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)
