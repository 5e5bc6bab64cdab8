"""Verification sweeps over the exhaustive small-graph corpora.

Each suite returns a SuiteResult whose ``violations`` list is empty on
success; every violation string starts with the offending graph in graph6
form so a failure is immediately reproducible.  All randomness is seeded, so
repeated runs print identical results.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import factorial

from . import bounds as bounds_mod
from .automorphisms import aut_order, aut_order_naive
from .bounds import ReportOptions, compose_report
from .corpus import CONNECTED_GRAPH_COUNTS, connected_graphs
from .embeddings import count_embeddings
from .graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    degree_stats,
    write_graph6,
)
from .trees import (
    all_spanning_trees,
    embedding_upper_fs,
    greedy_spanning_tree,
    spanning_tree_count,
    tree_aut_exact,
    tree_aut_upper,
    tree_certificate,
    verify_greedy_tree,
)

DEFAULT_SEED = 20020489


@dataclass
class SuiteResult:
    name: str
    checked: int
    violations: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        state = "PASS" if self.passed else "FAIL"
        return f"[{self.name}] {state}: {self.checked} checks, {len(self.violations)} violations"


def _corpus(nmax: int, external: list[Graph] | None = None):
    if external is not None:
        return {0: list(external)}
    return {n: list(connected_graphs(n)) for n in range(1, nmax + 1)}


def soundness_sweep(nmax: int = 7, external: list[Graph] | None = None) -> SuiteResult:
    """Every applicable bound must dominate the exact order on every connected
    graph: exact comparison for rational values, 1e-9 log2 slack otherwise.
    Orbit sizes dividing the order ride along on the same pass."""
    res = SuiteResult("soundness", 0)
    opts = ReportOptions(corollary_mode="both")
    counts = {}
    for n, graphs in _corpus(nmax, external).items():
        counts[n] = len(graphs)
        for g in graphs:
            rep = compose_report(g, opts)
            res.checked += 1
            for bid in rep.soundness_violations():
                bv = rep.bound(bid)
                res.violations.append(
                    f"{rep.graph_id}: {bid} = {bv.exact_value or bv.log2_value} "
                    f"< aut = {rep.aut_exact}")
            for orb in rep.orbits:
                if rep.aut_exact % len(orb) != 0:
                    res.violations.append(
                        f"{rep.graph_id}: orbit size {len(orb)} does not divide {rep.aut_exact}")
    res.info["corpus_counts"] = counts
    if external is None:
        expected = {n: CONNECTED_GRAPH_COUNTS[n] for n in counts}
        res.info["corpus_ok"] = counts == expected
        if counts != expected:
            res.violations.append(f"corpus counts {counts} != expected {expected}")
    return res


def greedy_sweep(nmax: int = 7, external: list[Graph] | None = None) -> SuiteResult:
    """Greedy construction record is valid for every start vertex, including
    the degree-sum identity 1 + d(v0) + sum(step sizes) = n; the resulting
    trees must also sit below the degree-product automorphism estimate."""
    res = SuiteResult("greedy-construction", 0)
    for _, graphs in _corpus(nmax, external).items():
        for g in graphs:
            gid = write_graph6(g)
            for v0 in range(g.n):
                res.checked += 1
                try:
                    gt = greedy_spanning_tree(g, v0)
                    verify_greedy_tree(g, gt)
                except (ValueError, AssertionError) as exc:
                    res.violations.append(f"{gid}: start {v0}: {exc}")
                    continue
                if g.n >= 3 and tree_aut_exact(gt.tree) > tree_aut_upper(gt.tree):
                    res.violations.append(
                        f"{gid}: greedy tree from {v0} above the degree-product estimate")
    return res


def exactness_suite() -> SuiteResult:
    """The greedy-tree orbit bound, minimised over start vertices and leaf
    choices, attains the exact order on complete and complete bipartite
    graphs; the classical degree bound attains it on complete graphs."""
    res = SuiteResult("exactness", 0)
    cases: list[tuple[str, Graph, int]] = []
    for n in range(3, 8):
        cases.append((f"K_{n}", complete_graph(n), factorial(n)))
    for m in range(2, 5):
        cases.append((f"K_{m},{m}", complete_bipartite_graph(m, m), 2 * factorial(m) ** 2))
    for q in range(2, 6):
        for p in range(1, q):
            cases.append((f"K_{p},{q}", complete_bipartite_graph(p, q),
                          factorial(p) * factorial(q)))
    opts = ReportOptions(bounds=("thm3_orbit",), exhaustive_start=True)
    for name, g, target in cases:
        res.checked += 1
        rep = compose_report(g, opts)
        bv = rep.bound("thm3_orbit")
        if rep.aut_exact != target:
            res.violations.append(f"{rep.graph_id} ({name}): aut {rep.aut_exact} != {target}")
        if bv.exact_value != target:
            res.violations.append(
                f"{rep.graph_id} ({name}): thm3_orbit {bv.exact_value} != {target}")
    for n in range(3, 8):
        res.checked += 1
        g = complete_graph(n)
        bv = bounds_mod.eval_eq1(degree_stats(g), n)
        if bv.exact_value != factorial(n):
            res.violations.append(
                f"{write_graph6(g)} (K_{n}): eq1 {bv.exact_value} != {factorial(n)}")
    return res


def _random_graph(n: int, rng: random.Random) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def oracle_suite(exhaustive_nmax: int = 6, trials: int = 200,
                 seed: int = DEFAULT_SEED) -> SuiteResult:
    """Search-based order equals the naive permutation count, exhaustively on
    small connected graphs and on seeded random graphs at n = 7 and 8."""
    res = SuiteResult("oracle-cross-validation", 0)
    for n in range(1, exhaustive_nmax + 1):
        for g in connected_graphs(n):
            res.checked += 1
            fancy = aut_order(g).order
            naive = aut_order_naive(g)
            if fancy != naive:
                res.violations.append(f"{write_graph6(g)}: search {fancy} != naive {naive}")
    rng = random.Random(seed)
    for n in (7, 8):
        for _ in range(trials):
            g = _random_graph(n, rng)
            res.checked += 1
            fancy = aut_order(g).order
            naive = aut_order_naive(g)
            if fancy != naive:
                res.violations.append(f"{write_graph6(g)}: search {fancy} != naive {naive}")
    res.info["trials_per_n"] = trials
    return res


def theorem1_suite(nmax: int = 6, external: list[Graph] | None = None) -> SuiteResult:
    """For every connected graph and every one of its spanning trees:

    - aut(G) <= labeled copies of the tree, with the counting identity
      labeled = copies * aut(T) re-derived by independent enumeration;
    - the subgraph-copy estimate prod(d_G(v))/delta_G dominates the true
      copy count, and (for trees with an internal vertex) the degree-product
      estimate dominates the true tree automorphism count.

    Spanning trees are enumerated twice over (subset+acyclicity here,
    subset+isomorphism inside the embedding counter) and reconciled per
    isomorphism class; the class census is also checked against the
    reduced-Laplacian determinant.
    """
    res = SuiteResult("theorem1-embeddings", 0)
    for _, graphs in _corpus(nmax, external).items():
        for g in graphs:
            gid = write_graph6(g)
            trees, truncated = all_spanning_trees(g)
            assert not truncated
            if spanning_tree_count(g) != len(trees):
                res.violations.append(
                    f"{gid}: determinant {spanning_tree_count(g)} != enumerated {len(trees)}")
            aut_g = aut_order(g).order
            fs_cap = embedding_upper_fs(g) if g.n >= 2 else None
            classes: dict = {}
            for t in trees:
                classes.setdefault(tree_certificate(t), []).append(t)
            for members in classes.values():
                rep_tree = members[0]
                ec = count_embeddings(rep_tree.to_graph(), g)
                res.checked += 1
                if ec.copies != len(members):
                    res.violations.append(
                        f"{gid}: class of {sorted(rep_tree.edges)}: subset+iso count "
                        f"{ec.copies} != certificate census {len(members)}")
                if aut_g > ec.labeled:
                    res.violations.append(
                        f"{gid}: aut {aut_g} > labeled copies {ec.labeled} "
                        f"of {sorted(rep_tree.edges)}")
                if ec.aut_f != tree_aut_exact(rep_tree):
                    res.violations.append(
                        f"{gid}: naive tree count {ec.aut_f} != centroid count "
                        f"{tree_aut_exact(rep_tree)}")
                if fs_cap is not None and ec.copies > fs_cap:
                    res.violations.append(
                        f"{gid}: copies {ec.copies} above degree-product cap {fs_cap}")
                for t in members:
                    if t.host_n >= 3 and tree_aut_exact(t) > tree_aut_upper(t):
                        res.violations.append(
                            f"{gid}: tree {sorted(t.edges)}: exact {tree_aut_exact(t)} "
                            f"> estimate {tree_aut_upper(t)}")
    return res


SUITES = {
    "soundness": (soundness_sweep, greedy_sweep),
    "exactness": (exactness_suite,),
    "oracle": (oracle_suite,),
    "theorem1": (theorem1_suite,),
}


def run_suites(names, nmax: int = 6, trials: int = 50,
               seed: int = DEFAULT_SEED, external: list[Graph] | None = None):
    """Run the named suites with shared size settings; yields SuiteResults."""
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
        for fn in SUITES[name]:
            if fn is soundness_sweep or fn is greedy_sweep:
                results.append(fn(nmax=nmax, external=external))
            elif fn is exactness_suite:
                results.append(fn())
            elif fn is oracle_suite:
                results.append(fn(exhaustive_nmax=min(nmax, 6), trials=trials, seed=seed))
            else:
                results.append(fn(nmax=min(nmax, 6), external=external))
    return results
