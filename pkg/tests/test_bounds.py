from fractions import Fraction
from math import log2

import pytest
from hypothesis import given, strategies as st

from autbounds.automorphisms import aut_order, aut_order_naive
from autbounds.bounds import (
    BOUND_IDS,
    ReportOptions,
    compose_report,
    eval_corollary,
    eval_eq1,
    eval_eq2,
    eval_eq3,
    eval_eq4,
    eval_eq5,
    eval_eq6,
    eval_eq7,
    eval_eq8,
    eval_thm1_tree,
    eval_thm3,
)
from autbounds.graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    degree_stats,
    path_graph,
    petersen_graph,
    star_graph,
)
from autbounds.trees import SpanningTree, greedy_spanning_tree

from helpers import connected_graphs_st

# log2 of the edge-excess base 2^(7/8) * 6^(1/24), recomputed independently
EDGE_BASE_LOG2 = 7 / 8 + log2(6) / 24


def star_tree(n):
    return SpanningTree(n, frozenset((0, v) for v in range(1, n)))


def path_tree(n):
    return SpanningTree(n, frozenset((v, v + 1) for v in range(n - 1)))


# --- eq1 ------------------------------------------------------------------

def test_eq1_values():
    assert eval_eq1(degree_stats(complete_graph(4)), 4).exact_value == 24
    assert eval_eq1(degree_stats(cycle_graph(4)), 4).exact_value == 8
    assert eval_eq1(degree_stats(petersen_graph()), 10).exact_value == 3840
    assert eval_eq1(degree_stats(complete_graph(2)), 2).exact_value == 2
    assert eval_eq1(degree_stats(Graph(1, (0,))), 1).exact_value == 1


# --- eq2 ------------------------------------------------------------------

def test_eq2_values():
    assert eval_eq2(complete_graph(4), star_tree(4)).exact_value == 162
    assert eval_eq2(cycle_graph(4), path_tree(4)).exact_value == 16
    assert eval_eq2(path_graph(3), path_tree(3)).exact_value == Fraction(64, 27)


def test_eq2_gated_on_single_edge():
    bv = eval_eq2(complete_graph(2), path_tree(2))
    assert not bv.applicable and "degenerates" in bv.reason


def test_eq2_rejects_non_spanning():
    with pytest.raises(ValueError):
        eval_eq2(path_graph(4), star_tree(4))


# --- eq3 / eq8 -------------------------------------------------------------

def test_eq3_c4_exact():
    bv = eval_eq3(cycle_graph(4), 1)
    assert bv.exact_value == 32 and bv.log2_value == pytest.approx(5.0, abs=1e-12)


def test_eq3_k4():
    bv = eval_eq3(complete_graph(4), 1)
    assert bv.exact_value is None
    assert bv.log2_value == pytest.approx(5 + 2 * EDGE_BASE_LOG2, abs=1e-9)


def test_eq3_claw():
    bv = eval_eq3(star_graph(3), 2)
    assert bv.log2_value == pytest.approx(10 - EDGE_BASE_LOG2, abs=1e-9)


def test_eq8_examples():
    assert eval_eq8(cycle_graph(4), True).exact_value == 32
    assert eval_eq8(cycle_graph(5), True).exact_value == 50
    k4 = eval_eq8(complete_graph(4), True)
    assert 2 ** k4.log2_value == pytest.approx(32 * 2 ** (2 * EDGE_BASE_LOG2), rel=1e-12)
    assert not eval_eq8(star_graph(3), False).applicable


@given(connected_graphs_st(max_n=8))
def test_eq8_is_eq3_at_p1(g):
    via_p1 = eval_eq3(g, 1)
    eq8 = eval_eq8(g, True)
    assert eq8.log2_value == via_p1.log2_value  # bit-for-bit
    assert eq8.exact_value == via_p1.exact_value


# --- eq4 ------------------------------------------------------------------

def test_eq4_petersen_exact():
    bv = eval_eq4(petersen_graph(), degree_stats(petersen_graph()))
    assert bv.exact_value == 118098
    assert bv.context["exponent"] == 1


def test_eq4_k4_log_domain():
    bv = eval_eq4(complete_graph(4), degree_stats(complete_graph(4)))
    assert bv.exact_value is None
    assert bv.context["exponent"] == Fraction(-1, 2)
    assert bv.log2_value == pytest.approx(4 * log2(3) - 0.5, abs=1e-9)


def test_eq4_gates():
    bv = eval_eq4(cycle_graph(4), degree_stats(cycle_graph(4)))
    assert not bv.applicable  # max degree 2 < 3
    bv = eval_eq4(star_graph(3), degree_stats(star_graph(3)))
    assert not bv.applicable  # min degree 1 < 2


# --- eq5 ------------------------------------------------------------------

def test_eq5_k4():
    assert eval_eq5(complete_graph(4), True).exact_value == 162


def test_eq5_gate():
    bv = eval_eq5(cycle_graph(4), False)
    assert not bv.applicable and "not asserted" in bv.reason


def test_eq5_cube():
    q3 = Graph.from_edges(8, [(i, i ^ b) for i in range(8) for b in (1, 2, 4) if i < (i ^ b)])
    assert aut_order(q3).order == 48 == aut_order_naive(q3)
    assert eval_eq5(q3, True).exact_value == 52488


def test_eq5_odd_n_log_domain():
    bv = eval_eq5(cycle_graph(5), True)
    assert bv.exact_value is None
    assert bv.log2_value == pytest.approx(log2(3) + 1.5 + 5 * 1 - 1, abs=1e-9)


# --- eq6 ------------------------------------------------------------------

def test_eq6_values():
    assert eval_eq6(complete_graph(4), 3).exact_value == 54
    assert eval_eq6(path_graph(4), 3).exact_value == Fraction(81, 16)
    assert eval_eq6(star_graph(3), 4).exact_value == Fraction(81, 2)


def test_eq6_gate_below_three():
    assert not eval_eq6(complete_graph(3), 2).applicable


def test_eq6_fractional_exponent():
    bv = eval_eq6(star_graph(3), 5)  # n=4, m-2=3 does not divide 4
    assert bv.exact_value is None
    expected = log2(24) + Fraction(4, 3) * log2(6) + 4 * log2(1.5) - log2(3)
    assert bv.log2_value == pytest.approx(float(expected), abs=1e-9)


# --- eq7 ------------------------------------------------------------------

def test_eq7_values():
    assert eval_eq7(cycle_graph(4), True).exact_value == Fraction(256, 27)
    assert eval_eq7(complete_graph(4), True).exact_value == 32
    assert eval_eq7(path_graph(4), True).exact_value == 4
    assert not eval_eq7(star_graph(3), False).applicable


# --- thm3 ------------------------------------------------------------------

def test_thm3_k4():
    k4 = complete_graph(4)
    bv = eval_thm3(k4, greedy_spanning_tree(k4, 0), 4)
    assert bv.exact_value == 24 == aut_order(k4).order


def test_thm3_k23():
    k23 = complete_bipartite_graph(2, 3)
    bv = eval_thm3(k23, greedy_spanning_tree(k23, 0), 2)
    assert bv.exact_value == 12 == aut_order(k23).order


def test_thm3_p4():
    p4 = path_graph(4)
    bv = eval_thm3(p4, greedy_spanning_tree(p4, 0), 2)
    assert bv.exact_value == 2 == aut_order(p4).order


def test_thm3_plain_uses_n():
    p4 = path_graph(4)
    bv = eval_thm3(p4, greedy_spanning_tree(p4, 0))
    assert bv.bound_id == "thm3_plain" and bv.exact_value == 4


def test_thm3_orbit_check_rejects():
    k4 = complete_graph(4)
    gt = greedy_spanning_tree(k4, 0)
    with pytest.raises(ValueError, match="contradicts"):
        eval_thm3(k4, gt, 3, orbit_check=4)
    assert eval_thm3(k4, gt, 4, orbit_check=4).exact_value == 24


# --- corollary --------------------------------------------------------------

def test_corollary_k4():
    s = degree_stats(complete_graph(4))
    assert eval_corollary(s, 4, "corrected").exact_value == 24
    assert eval_corollary(s, 4, "verbatim").exact_value == 576


def test_corollary_c6():
    s = degree_stats(cycle_graph(6))
    bv = eval_corollary(s, 6, "corrected")
    assert bv.exact_value == 12 == aut_order(cycle_graph(6)).order
    assert bv.context["r"] == 3 and bv.context["alpha"] == 0


def test_corollary_gates():
    assert not eval_corollary(degree_stats(complete_graph(2)), 2, "corrected").applicable
    with pytest.raises(ValueError):
        eval_corollary(degree_stats(complete_graph(4)), 4, "sideways")


# --- thm1 -------------------------------------------------------------------

def test_thm1_exact_routes():
    assert eval_thm1_tree(complete_graph(4), star_tree(4)).exact_value == 24
    assert eval_thm1_tree(cycle_graph(4), path_tree(4)).exact_value == 8
    bv = eval_thm1_tree(cycle_graph(5), path_tree(5))
    assert bv.exact_value == 10 == aut_order(cycle_graph(5)).order
    assert bv.context["route"] == "exact_embeddings"


def test_thm1_estimate_route():
    pet = petersen_graph()
    t = greedy_spanning_tree(pet, 0).tree
    bv = eval_thm1_tree(pet, t)
    assert bv.context["route"] == "fs_fa_product"
    from autbounds.trees import embedding_upper_fs, tree_aut_upper
    assert bv.exact_value == embedding_upper_fs(pet) * tree_aut_upper(t)
    assert bv.exact_value >= 120


# --- compose_report ---------------------------------------------------------

def test_report_k4_defaults():
    rep = compose_report(complete_graph(4))
    assert rep.aut_exact == 24
    assert len(rep.bounds) == 12
    assert [bv.bound_id for bv in rep.bounds] == list(BOUND_IDS)
    tight = {bid for bid, gap in rep.gaps.items() if abs(gap) < 1e-9}
    assert {"eq1_nashwilliams", "thm3_orbit", "corollary"} <= tight
    assert rep.soundness_violations() == []


def test_report_bounds_filter():
    rep = compose_report(complete_graph(4),
                         ReportOptions(bounds=("eq1_nashwilliams", "thm3_orbit")))
    assert [bv.bound_id for bv in rep.bounds] == ["eq1_nashwilliams", "thm3_orbit"]


def test_report_unknown_bound_rejected():
    with pytest.raises(ValueError, match="unknown bound"):
        ReportOptions(bounds=("eq1_nashwilliams", "eq99"))


def test_report_claw_gates():
    rep = compose_report(star_graph(3))
    assert not rep.bound("eq7_hamiltonian").applicable
    assert not rep.bound("eq8_hampath_edges").applicable
    assert not rep.bound("eq4_degree_exponent").applicable
    assert rep.bound("eq3_pathcover").applicable  # p=2 works fine


def test_report_disconnected():
    rep = compose_report(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert rep.aut_exact == 8
    assert all(not bv.applicable for bv in rep.bounds)
    assert all(bv.reason == "graph is disconnected" for bv in rep.bounds)
    assert rep.gaps == {}


def test_report_without_oracle():
    rep = compose_report(complete_graph(4), ReportOptions(exact_aut=False))
    assert rep.aut_exact is None and rep.gaps == {}
    assert not rep.bound("thm3_orbit").applicable
    assert rep.bound("thm3_plain").applicable


def test_report_corollary_both():
    rep = compose_report(complete_graph(4), ReportOptions(corollary_mode="both"))
    ids = [bv.bound_id for bv in rep.bounds]
    assert "corollary_corrected" in ids and "corollary_verbatim" in ids
    assert len(rep.bounds) == 13
    assert rep.bound("corollary_corrected").exact_value == 24
    assert rep.bound("corollary_verbatim").exact_value == 576


def test_report_exhaustive_start():
    k23 = complete_bipartite_graph(2, 3)
    rep = compose_report(k23, ReportOptions(exhaustive_start=True))
    assert rep.bound("thm3_orbit").exact_value == 12 == rep.aut_exact


def test_log2_matches_exact_value():
    rep = compose_report(complete_graph(7), ReportOptions(corollary_mode="both"))
    for bv in rep.bounds:
        if bv.applicable and bv.exact_value is not None:
            expected = log2(bv.exact_value.numerator) - log2(bv.exact_value.denominator)
            assert bv.log2_value == pytest.approx(expected, abs=1e-9)


@given(connected_graphs_st(max_n=7))
def test_report_sound_on_random_graphs(g):
    rep = compose_report(g, ReportOptions(corollary_mode="both"))
    assert rep.soundness_violations() == []


@given(connected_graphs_st(max_n=7))
def test_thm3_orbit_below_plain(g):
    rep = compose_report(g, ReportOptions(bounds=("thm3_orbit", "thm3_plain")))
    assert rep.bound("thm3_orbit").exact_value <= rep.bound("thm3_plain").exact_value


def test_corollary_majorizes_worst_start_thm3(corpus7):
    """The corrected remainder bound dominates the plain greedy bound for
    every start vertex: its factorial blocks are the worst case of the
    degree-sum identity."""
    for n in range(1, 8):
        for g in corpus7[n]:
            cor = eval_corollary(degree_stats(g), g.n, "corrected")
            if not cor.applicable:
                continue
            for v0 in range(g.n):
                plain = eval_thm3(g, greedy_spanning_tree(g, v0))
                assert plain.exact_value <= cor.exact_value


@given(connected_graphs_st(max_n=7), st.data())
def test_degree_only_bounds_relabel_invariant(g, data):
    perm = tuple(data.draw(st.permutations(list(range(g.n)))))
    h = g.relabel(perm)
    from autbounds.structure import path_cover_number
    p = path_cover_number(g).p
    assert path_cover_number(h).p == p
    pairs = [
        (eval_eq1(degree_stats(g), g.n), eval_eq1(degree_stats(h), h.n)),
        (eval_eq3(g, p), eval_eq3(h, p)),
        (eval_eq4(g, degree_stats(g)), eval_eq4(h, degree_stats(h))),
        (eval_eq7(g, p == 1), eval_eq7(h, p == 1)),
        (eval_eq8(g, p == 1), eval_eq8(h, p == 1)),
        (eval_corollary(degree_stats(g), g.n), eval_corollary(degree_stats(h), h.n)),
    ]
    for a, b in pairs:
        assert a.applicable == b.applicable
        assert a.exact_value == b.exact_value
        assert a.log2_value == b.log2_value  # bit-for-bit: same degree data in
