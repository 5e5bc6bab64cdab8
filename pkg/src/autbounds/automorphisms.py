"""Exact automorphism group order, orbits, and generators.

The main routine runs a backtracking search pruned by iterated
degree-within-cell partition refinement.  It individualises one base vertex
per level and counts along the chain of point stabilisers: the group order is
the product over levels of the number of vertices the level's base point can
be sent to by an automorphism fixing the earlier base points.  That keeps the
order exact without ever enumerating group elements, so orders far beyond
enumeration range (24! and the like) are fine.

``aut_order_naive`` is the independent cross-check: it literally walks all n!
permutations, which is why it refuses n > 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .graphs import Graph, SizeLimitError, bits

NAIVE_VERTEX_LIMIT = 8


@dataclass(frozen=True)
class AutResult:
    """Group order, vertex orbits, and the generators found by the search."""

    order: int
    orbits: tuple[tuple[int, ...], ...]
    generators: tuple[tuple[int, ...], ...]

    def orbit_of(self, v: int) -> tuple[int, ...]:
        for orb in self.orbits:
            if v in orb:
                return orb
        raise ValueError(f"vertex {v} not in any orbit")


# ---------------------------------------------------------------------------
# Equitable refinement on ordered partitions of bitmask cells.
#
# A cell splits by the signature (neighbour count into every current cell);
# subcells are ordered by signature value, which is deterministic and
# isomorphism-invariant, so two sides of a search refine in lockstep.
# ---------------------------------------------------------------------------

def _refine(rows, cells):
    """Refine to a fixed point; returns (cells, trace of splits)."""
    cells = list(cells)
    trace = []
    while True:
        for ci, cell in enumerate(cells):
            if cell & (cell - 1) == 0:  # singleton
                continue
            buckets: dict[tuple, int] = {}
            for v in bits(cell):
                sig = tuple((rows[v] & other).bit_count() for other in cells)
                buckets[sig] = buckets.get(sig, 0) | 1 << v
            if len(buckets) > 1:
                ordered = sorted(buckets.items())
                cells[ci:ci + 1] = [m for _, m in ordered]
                trace.append((ci, tuple((s, m.bit_count()) for s, m in ordered)))
                break
        else:
            return cells, tuple(trace)


def _target_cell(cells):
    """Index of the first largest non-singleton cell, or None if discrete."""
    best = None
    best_size = 1
    for i, c in enumerate(cells):
        s = c.bit_count()
        if s > best_size:
            best_size = s
            best = i
    return best


def _individualized(cells, ci, v):
    out = list(cells)
    out[ci:ci + 1] = [1 << v, cells[ci] & ~(1 << v)]
    return out


def _is_mapping(rows_a, rows_b, perm) -> bool:
    for v, row in enumerate(rows_a):
        img = 0
        for w in bits(row):
            img |= 1 << perm[w]
        if img != rows_b[perm[v]]:
            return False
    return True


def _search(rows_a, rows_b, cells_a, cells_b):
    """Find a bijection of rows_a onto rows_b matching the paired ordered
    partitions cell-for-cell, or None.  rows_a may equal rows_b."""
    cells_a, tr_a = _refine(rows_a, cells_a)
    cells_b, tr_b = _refine(rows_b, cells_b)
    if tr_a != tr_b:
        return None
    ti = _target_cell(cells_a)
    if ti is None:
        perm = [0] * len(rows_a)
        for ca, cb in zip(cells_a, cells_b):
            perm[ca.bit_length() - 1] = cb.bit_length() - 1
        perm = tuple(perm)
        return perm if _is_mapping(rows_a, rows_b, perm) else None
    x = (cells_a[ti] & -cells_a[ti]).bit_length() - 1
    for y in bits(cells_b[ti]):
        found = _search(rows_a, rows_b,
                        _individualized(cells_a, ti, x),
                        _individualized(cells_b, ti, y))
        if found is not None:
            return found
    return None


def _orbits_from_generators(n, gens):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for v in range(n):
            ra, rb = find(v), find(p[v])
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted((tuple(sorted(grp)) for grp in groups.values()), key=min))


@lru_cache(maxsize=512)
def aut_order(g: Graph) -> AutResult:
    """Exact automorphism group order, orbit partition, and generators."""
    n, rows = g.n, g.rows
    if n == 1:
        return AutResult(1, ((0,),), ())
    cells, _ = _refine(rows, [(1 << n) - 1])
    order = 1
    gens: list[tuple[int, ...]] = []
    while True:
        ti = _target_cell(cells)
        if ti is None:
            break
        cell = cells[ti]
        b = (cell & -cell).bit_length() - 1
        stabilizer_orbit = 1
        for w in bits(cell):
            if w == b:
                continue
            perm = _search(rows, rows,
                           _individualized(cells, ti, b),
                           _individualized(cells, ti, w))
            if perm is not None:
                stabilizer_orbit += 1
                gens.append(perm)
        order *= stabilizer_orbit
        cells, _ = _refine(rows, _individualized(cells, ti, b))
    return AutResult(order, _orbits_from_generators(n, gens), tuple(gens))


def aut_order_naive(g: Graph) -> int:
    """Count adjacency-preserving permutations by walking all n! of them."""
    if g.n > NAIVE_VERTEX_LIMIT:
        raise SizeLimitError(
            f"naive oracle enumerates n! permutations; n={g.n} exceeds {NAIVE_VERTEX_LIMIT}")
    rows = g.rows
    edge_list = tuple((u, v) for u in range(g.n) for v in bits(rows[u]) if u < v)
    count = 0
    for p in permutations(range(g.n)):
        for u, v in edge_list:
            if not (rows[p[u]] >> p[v]) & 1:
                break
        else:
            count += 1
    return count


def orbit_size(g: Graph, v: int) -> int:
    """Size of v's orbit under the full automorphism group."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return len(aut_order(g).orbit_of(v))


def _find_isomorphism(g1: Graph, g2: Graph):
    """Internal: one isomorphism g1 -> g2 or None.  Used for corpus dedup."""
    if g1.n != g2.n or g1.e != g2.e:
        return None
    if sorted(g1.degrees) != sorted(g2.degrees):
        return None
    full = (1 << g1.n) - 1
    return _search(g1.rows, g2.rows, [full], [full])
