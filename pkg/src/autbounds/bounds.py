"""Evaluation of the upper-bound catalogue and report assembly.

Arithmetic policy: every bound whose closed form is rational in the graph
data is evaluated exactly over Fractions.  The two bounds carrying the
irrational edge-excess base 2^(7/8) * 6^(1/24), and any bound raised to a
fractional factorial exponent, are evaluated in the log2 domain at 120 bits
of working precision before rounding to a float; soundness comparisons on
those use a documented 1e-9 slack.

Inapplicable bounds are gated, never raised: each carries a machine-readable
reason so a report over an awkward graph still renders every row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import mpmath

from .graphs import Graph, DegreeStats, degree_stats, is_connected, write_graph6
from .automorphisms import aut_order
from .trees import (
    GreedyTree,
    SpanningTree,
    best_greedy_tree,
    embedding_upper_fs,
    greedy_spanning_tree,
    tree_aut_upper,
)
from .embeddings import EMBED_VERTEX_LIMIT, count_labeled_embeddings
from .structure import (
    STRUCTURE_VERTEX_LIMIT,
    path_cover_number,
    star_free_parameter,
)

WORKING_PRECISION_BITS = 120
LOG2_COMPARISON_SLACK = 1e-9

BOUND_IDS = (
    "thm1_tree",
    "eq1_nashwilliams",
    "eq2_tree_product",
    "eq3_pathcover",
    "eq4_degree_exponent",
    "eq5_special_class",
    "eq6_starfree",
    "eq7_hamiltonian",
    "eq8_hampath_edges",
    "thm3_orbit",
    "thm3_plain",
    "corollary",
)


@dataclass(frozen=True)
class BoundValue:
    """One evaluated bound: exact rational when representable, log2 always."""

    bound_id: str
    applicable: bool
    reason: str | None
    exact_value: Fraction | None
    log2_value: float | None
    context: dict = field(default_factory=dict)


def _log2(x) -> mpmath.mpf:
    """log2 of an int or Fraction at the working precision."""
    if isinstance(x, Fraction):
        return mpmath.log(mpmath.mpf(x.numerator), 2) - mpmath.log(mpmath.mpf(x.denominator), 2)
    return mpmath.log(mpmath.mpf(x), 2)


def _edge_excess_log2() -> mpmath.mpf:
    # log2 of 2^(7/8) * 6^(1/24)
    return mpmath.mpf(7) / 8 + mpmath.log(mpmath.mpf(6), 2) / 24


def _exact(bound_id: str, value, context: dict) -> BoundValue:
    fr = value if isinstance(value, Fraction) else Fraction(value)
    with mpmath.workprec(WORKING_PRECISION_BITS):
        log2v = float(_log2(fr))
    return BoundValue(bound_id, True, None, fr, log2v, context)


def _logonly(bound_id: str, log2v: float, context: dict) -> BoundValue:
    return BoundValue(bound_id, True, None, None, log2v, context)


def _gated(bound_id: str, reason: str, context: dict | None = None) -> BoundValue:
    return BoundValue(bound_id, False, reason, None, None, context or {})


# ---------------------------------------------------------------------------
# The catalogue.  All formulas assume a connected host; the report layer
# gates disconnected inputs before these run.
# ---------------------------------------------------------------------------

def eval_eq1(stats: DegreeStats, n: int) -> BoundValue:
    """n * delta! * (delta-1)^(n-delta-1); exponent 0 always yields factor 1."""
    delta = stats.delta_max
    exponent = n - delta - 1
    ctx = {"delta": delta, "exponent": exponent}
    if exponent < 0:
        return _gated("eq1_nashwilliams", "needs n >= max degree + 1", ctx)
    base = delta - 1
    value = n * factorial(delta) * (base ** exponent if exponent > 0 else 1)
    return _exact("eq1_nashwilliams", value, ctx)


def eval_eq2(g: Graph, t: SpanningTree) -> BoundValue:
    """(delta_T/delta_G) * d_avg^n * prod over vertices of (tree degree - 1)!.

    Gated below n = 3: on the single-edge tree the degree product collapses
    to 1 while the swap automorphism exists, so the estimate is false there.
    """
    ctx = {"tree_edges": tuple(sorted(t.edges)), "delta_t": t.delta_max}
    if not t.spans(g):
        raise ValueError("tree does not span the host graph")
    if g.n < 3:
        return _gated("eq2_tree_product",
                      "tree-degree estimate degenerates below n = 3", ctx)
    stats = degree_stats(g)
    prod = 1
    for d in t.degrees:
        prod *= factorial(d - 1)
    value = Fraction(t.delta_max, stats.delta_max) * stats.d_avg ** g.n * prod
    return _exact("eq2_tree_product", value, ctx)


def eval_eq3(g: Graph, p: int) -> BoundValue:
    """2p * n^(2p) * (2^(7/8) * 6^(1/24))^(e-n); exact only when e == n."""
    if p < 1:
        raise ValueError("path covering number must be at least 1")
    excess = g.e - g.n
    ctx = {"p": p, "edge_excess": excess}
    rational_part = 2 * p * g.n ** (2 * p)
    if excess == 0:
        return _exact("eq3_pathcover", rational_part, ctx)
    with mpmath.workprec(WORKING_PRECISION_BITS):
        log2v = float(_log2(rational_part) + excess * _edge_excess_log2())
    return _logonly("eq3_pathcover", log2v, ctx)


def eval_eq4(g: Graph, stats: DegreeStats) -> BoundValue:
    """d_avg^n * ((delta-1)!)^((e-n+3-2*delta_min)/((delta_min-1)(delta-2))),
    gated to min degree >= 2 and max degree >= 3."""
    delta, dmin = stats.delta_max, stats.delta_min
    if dmin < 2 or delta < 3:
        return _gated("eq4_degree_exponent",
                      "requires min degree >= 2 and max degree >= 3",
                      {"delta": delta, "delta_min": dmin})
    exponent = Fraction(g.e - g.n + 3 - 2 * dmin, (dmin - 1) * (delta - 2))
    ctx = {"exponent": exponent}
    base = factorial(delta - 1)
    if exponent.denominator == 1 and exponent >= 0:
        value = stats.d_avg ** g.n * base ** int(exponent)
        return _exact("eq4_degree_exponent", value, ctx)
    with mpmath.workprec(WORKING_PRECISION_BITS):
        exp_mp = mpmath.mpf(exponent.numerator) / exponent.denominator
        log2v = float(g.n * _log2(stats.d_avg) + exp_mp * _log2(base))
    return _logonly("eq4_degree_exponent", log2v, ctx)


def eval_eq5(g: Graph, class_asserted: bool) -> BoundValue:
    """3 * 2^((n-2)/2) * d_avg^n / delta, for squares of graphs and
    3-connected planar graphs; membership is caller-asserted."""
    ctx = {"class_asserted": class_asserted}
    if not class_asserted:
        return _gated("eq5_special_class",
                      "class membership not asserted "
                      "(square of a graph or 3-connected planar)", ctx)
    if g.n < 2:
        return _gated("eq5_special_class", "degenerate on a single vertex", ctx)
    stats = degree_stats(g)
    if g.n % 2 == 0:
        value = 3 * Fraction(2) ** ((g.n - 2) // 2) * stats.d_avg ** g.n / stats.delta_max
        return _exact("eq5_special_class", value, ctx)
    with mpmath.workprec(WORKING_PRECISION_BITS):
        log2v = float(_log2(3) + mpmath.mpf(g.n - 2) / 2
                      + g.n * _log2(stats.d_avg) - _log2(stats.delta_max))
    return _logonly("eq5_special_class", log2v, ctx)


def eval_eq6(g: Graph, m: int) -> BoundValue:
    """(m-1)! * ((m-2)!)^(n/(m-2)) * d_avg^n / delta for hosts with no
    induced star of m leaves; degenerate below m = 3."""
    ctx = {"m": m}
    if m < 3:
        return _gated("eq6_starfree", "formula degenerates below m = 3", ctx)
    if g.n < 2:
        return _gated("eq6_starfree", "degenerate on a single vertex", ctx)
    stats = degree_stats(g)
    exponent = Fraction(g.n, m - 2)
    ctx["exponent"] = exponent
    if exponent.denominator == 1:
        value = (factorial(m - 1) * factorial(m - 2) ** int(exponent)
                 * stats.d_avg ** g.n / stats.delta_max)
        return _exact("eq6_starfree", value, ctx)
    with mpmath.workprec(WORKING_PRECISION_BITS):
        exp_mp = mpmath.mpf(exponent.numerator) / exponent.denominator
        log2v = float(_log2(factorial(m - 1)) + exp_mp * _log2(factorial(m - 2))
                      + g.n * _log2(stats.d_avg) - _log2(stats.delta_max))
    return _logonly("eq6_starfree", log2v, ctx)


def eval_eq7(g: Graph, ham: bool) -> BoundValue:
    """n * (e/(n-1))^(n-1), valid when a Hamiltonian path exists."""
    ctx = {"hamiltonian_path": ham}
    if not ham:
        return _gated("eq7_hamiltonian", "no Hamiltonian path", ctx)
    if g.n < 2:
        return _gated("eq7_hamiltonian", "degenerate on a single vertex", ctx)
    value = g.n * Fraction(g.e, g.n - 1) ** (g.n - 1)
    return _exact("eq7_hamiltonian", value, ctx)


def eval_eq8(g: Graph, ham: bool) -> BoundValue:
    """2n^2 * (2^(7/8) * 6^(1/24))^(e-n): the path-cover bound pinned at
    p = 1, so it must agree with that evaluation bit for bit."""
    ctx = {"hamiltonian_path": ham, "p": 1, "edge_excess": g.e - g.n}
    if not ham:
        return _gated("eq8_hampath_edges", "no Hamiltonian path", ctx)
    via_p1 = eval_eq3(g, 1)
    assert via_p1.applicable
    return BoundValue("eq8_hampath_edges", True, None,
                      via_p1.exact_value, via_p1.log2_value, ctx)


def eval_thm3(g: Graph, gt: GreedyTree, n1: int | None = None,
              orbit_check: int | None = None) -> BoundValue:
    """Greedy-tree stabiliser-chain bound:
    n1 * d(v0)! * product over expansion steps of (tree degree - 1)!.

    With n1 absent the orbit length is replaced by n (the always-available
    form).  ``orbit_check`` rejects an n1 inconsistent with the oracle."""
    v0 = gt.root
    if n1 is not None and orbit_check is not None and n1 != orbit_check:
        raise ValueError(f"n1={n1} contradicts the orbit size {orbit_check} of vertex {v0}")
    factor = n1 if n1 is not None else g.n
    value = factor * factorial(g.degree(v0))
    for k in gt.step_sizes():
        value *= factorial(k)
    ctx = {"v0": v0, "n1": factor, "sequence": gt.sequence,
           "step_sizes": gt.step_sizes()}
    bound_id = "thm3_orbit" if n1 is not None else "thm3_plain"
    return _exact(bound_id, value, ctx)


def eval_corollary(stats: DegreeStats, n: int, mode: str = "corrected") -> BoundValue:
    """n * alpha! * delta! * ((delta-1)!)^r with r = floor((n-delta-1)/(delta-1)).

    verbatim mode uses alpha = n - r*(delta-1) as printed in the source
    statement; corrected mode uses alpha = n - delta - 1 - r*(delta-1), the
    remainder that actually satisfies 0 <= alpha < delta - 1."""
    if mode not in ("corrected", "verbatim"):
        raise ValueError(f"unknown corollary mode {mode!r}")
    delta = stats.delta_max
    if delta < 2:
        return _gated("corollary", "requires max degree >= 2", {"mode": mode})
    if n < delta + 1:
        return _gated("corollary", "requires n >= max degree + 1", {"mode": mode})
    r = (n - delta - 1) // (delta - 1)
    alpha = n - r * (delta - 1) if mode == "verbatim" else n - delta - 1 - r * (delta - 1)
    assert alpha >= 0
    value = n * factorial(alpha) * factorial(delta) * factorial(delta - 1) ** r
    return _exact("corollary", value, {"mode": mode, "r": r, "alpha": alpha})


def eval_thm1_tree(g: Graph, t: SpanningTree) -> BoundValue:
    """Spanning-tree embedding bound: the exact number of labeled copies of t
    in g when brute force is feasible, otherwise the product of the
    degree-product estimates for copies and tree automorphisms."""
    if not t.spans(g):
        raise ValueError("tree does not span the host graph")
    ctx = {"tree_edges": tuple(sorted(t.edges))}
    if g.n <= EMBED_VERTEX_LIMIT:
        ctx["route"] = "exact_embeddings"
        value = count_labeled_embeddings(t.to_graph(), g)
        return _exact("thm1_tree", value, ctx)
    ctx["route"] = "fs_fa_product"
    value = embedding_upper_fs(g) * tree_aut_upper(t)
    return _exact("thm1_tree", value, ctx)


# ---------------------------------------------------------------------------
# Report assembly.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReportOptions:
    """Engine-level report options; the CLI layers I/O choices on top."""

    bounds: tuple[str, ...] | None = None
    exact_aut: bool = True
    exhaustive_start: bool = False
    class5_asserted: bool = False
    corollary_mode: str = "corrected"  # corrected | verbatim | both

    def __post_init__(self):
        if self.bounds is not None:
            unknown = [b for b in self.bounds if b not in BOUND_IDS]
            if unknown:
                raise ValueError(f"unknown bound ids: {unknown}")
        if self.corollary_mode not in ("corrected", "verbatim", "both"):
            raise ValueError(f"unknown corollary mode {self.corollary_mode!r}")


@dataclass
class BoundReport:
    graph_id: str
    n: int
    e: int
    connected: bool
    aut_exact: int | None
    orbits: tuple[tuple[int, ...], ...] | None
    bounds: list[BoundValue]
    gaps: dict[str, float]
    notes: list[str]

    def bound(self, bound_id: str) -> BoundValue:
        for bv in self.bounds:
            if bv.bound_id == bound_id:
                return bv
        raise KeyError(bound_id)

    def soundness_violations(self) -> list[str]:
        """Bound ids whose applicable value drops below the exact order.
        Exact values compare exactly; log-domain values get the 1e-9 slack."""
        if self.aut_exact is None:
            return []
        bad = []
        with mpmath.workprec(WORKING_PRECISION_BITS):
            log2_aut = float(_log2(self.aut_exact))
        for bv in self.bounds:
            if not bv.applicable:
                continue
            if bv.exact_value is not None:
                if bv.exact_value < self.aut_exact:
                    bad.append(bv.bound_id)
            elif bv.log2_value < log2_aut - LOG2_COMPARISON_SLACK:
                bad.append(bv.bound_id)
        return bad


def _requested(options: ReportOptions) -> list[str]:
    return list(options.bounds) if options.bounds is not None else list(BOUND_IDS)


def compose_report(g: Graph, options: ReportOptions = ReportOptions()) -> BoundReport:
    """Evaluate every requested bound on g, gated by applicability, and attach
    per-bound log2 tightness gaps against the exact order."""
    requested = _requested(options)
    connected = is_connected(g)
    stats = degree_stats(g)
    notes: list[str] = []

    aut_res = aut_order(g) if options.exact_aut else None
    if not options.exact_aut:
        notes.append("exact automorphism order suppressed by options; gaps omitted")
    if not connected:
        notes.append("graph is disconnected: every bound requires a connected host")

    gt = tree = None
    if connected:
        gt = greedy_spanning_tree(g, 0)
        tree = gt.tree

    structural_ok = g.n <= STRUCTURE_VERTEX_LIMIT
    p = ham = None
    if connected and structural_ok:
        needs_p = any(b in requested for b in ("eq3_pathcover", "eq7_hamiltonian",
                                               "eq8_hampath_edges"))
        if needs_p:
            p = path_cover_number(g).p
            ham = p == 1
    m_used = None
    if connected and structural_ok and "eq6_starfree" in requested:
        m_used = max(3, star_free_parameter(g).m_min)

    size_reason = f"exact structural analysis capped at n <= {STRUCTURE_VERTEX_LIMIT}"

    def disconnected(bound_id):
        return _gated(bound_id, "graph is disconnected")

    out: list[BoundValue] = []
    for bid in requested:
        if not connected:
            if bid == "corollary" and options.corollary_mode == "both":
                out.append(_gated("corollary_corrected", "graph is disconnected"))
                out.append(_gated("corollary_verbatim", "graph is disconnected"))
            else:
                out.append(disconnected(bid))
            continue
        if bid == "thm1_tree":
            out.append(eval_thm1_tree(g, tree))
        elif bid == "eq1_nashwilliams":
            out.append(eval_eq1(stats, g.n))
        elif bid == "eq2_tree_product":
            out.append(eval_eq2(g, tree))
        elif bid == "eq3_pathcover":
            out.append(eval_eq3(g, p) if p is not None else _gated(bid, size_reason))
        elif bid == "eq4_degree_exponent":
            out.append(eval_eq4(g, stats))
        elif bid == "eq5_special_class":
            out.append(eval_eq5(g, options.class5_asserted))
        elif bid == "eq6_starfree":
            out.append(eval_eq6(g, m_used) if m_used is not None else _gated(bid, size_reason))
        elif bid == "eq7_hamiltonian":
            out.append(eval_eq7(g, ham) if ham is not None else _gated(bid, size_reason))
        elif bid == "eq8_hampath_edges":
            out.append(eval_eq8(g, ham) if ham is not None else _gated(bid, size_reason))
        elif bid == "thm3_orbit":
            out.append(_thm3_entry(g, gt, aut_res, options, with_orbit=True))
        elif bid == "thm3_plain":
            out.append(_thm3_entry(g, gt, aut_res, options, with_orbit=False))
        elif bid == "corollary":
            modes = (("corrected", "verbatim") if options.corollary_mode == "both"
                     else (options.corollary_mode,))
            for mode in modes:
                bv = eval_corollary(stats, g.n, mode)
                if options.corollary_mode == "both":
                    bv = BoundValue(f"corollary_{mode}", bv.applicable, bv.reason,
                                    bv.exact_value, bv.log2_value, bv.context)
                out.append(bv)
        else:  # pragma: no cover - ReportOptions already validated
            raise ValueError(f"unknown bound id {bid}")

    gaps: dict[str, float] = {}
    if aut_res is not None:
        with mpmath.workprec(WORKING_PRECISION_BITS):
            log2_aut = float(_log2(aut_res.order))
        for bv in out:
            if bv.applicable:
                gaps[bv.bound_id] = bv.log2_value - log2_aut

    return BoundReport(
        graph_id=write_graph6(g),
        n=g.n,
        e=g.e,
        connected=connected,
        aut_exact=aut_res.order if aut_res else None,
        orbits=aut_res.orbits if aut_res else None,
        bounds=out,
        gaps=gaps,
        notes=notes,
    )


def _thm3_entry(g, gt, aut_res, options, with_orbit: bool) -> BoundValue:
    if with_orbit and aut_res is None:
        return _gated("thm3_orbit", "orbit size needs the exact automorphism oracle")
    if not options.exhaustive_start:
        n1 = len(aut_res.orbit_of(gt.root)) if with_orbit else None
        bv = eval_thm3(g, gt, n1)
        ctx = dict(bv.context, exhaustive=False)
        return BoundValue(bv.bound_id, True, None, bv.exact_value, bv.log2_value, ctx)
    # Exhaustive mode: minimise over every start vertex and leaf choice.
    best = None
    for v0 in range(g.n):
        cand_gt, _ = best_greedy_tree(g, v0)
        n1 = len(aut_res.orbit_of(v0)) if with_orbit else None
        bv = eval_thm3(g, cand_gt, n1)
        if best is None or bv.exact_value < best.exact_value:
            best = bv
    ctx = dict(best.context, exhaustive=True)
    return BoundValue(best.bound_id, True, None, best.exact_value, best.log2_value, ctx)
