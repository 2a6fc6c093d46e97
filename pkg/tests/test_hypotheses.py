from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from packlab.canon import enumerate_graphs
from packlab.errors import BadParameter, NotRegular, SizeMismatch
from packlab.families import build_complete, build_complete_bipartite, build_cycle_edges, build_disjoint_copies, build_independent, build_path_edges, build_star, disjoint_union
from packlab.graph import delta_plus, max_degree, min_degree
from packlab.hypotheses import (
    check_bec,
    check_cor4,
    check_forest_embed,
    check_katerinis,
    check_main,
    check_theorem5_hypothesis,
    check_theorem7_hypothesis,
    exceptions_report,
    g_value,
    katerinis_assignment_packs,
    positive_part_has_k_factor_realization,
    sample_phis,
)

K = build_complete
F1 = (disjoint_union(build_cycle_edges(5), K(1)), build_disjoint_copies(2, K(3)))
F3 = (build_disjoint_copies(3, K(2)), build_complete_bipartite(3, 3))


def test_bec_examples():
    assert not check_bec(build_disjoint_copies(2, K(2)), build_complete_bipartite(2, 2)).holds
    assert check_bec(build_independent(4), build_independent(4)).holds
    rep = check_bec(*F3)
    assert not rep.holds and rep.quantities["lhs"] == rep.quantities["n"] + 2


def test_main_examples():
    rep = check_main(*F1)
    assert rep.holds and rep.quantities["lhs"] == 9 and rep.quantities["rhs"] == 9 and rep.quantities["g"] == 0
    rep = check_main(*F3)
    assert rep.holds and rep.quantities["lhs"] == 8 and rep.quantities["rhs"] == 8
    assert check_main(K(4), build_independent(4)).holds
    rep = check_main(build_independent(4), K(4))
    assert rep.holds and rep.quantities["g"] is None


def test_cor4_examples():
    rep = check_cor4(*F1)
    assert not rep.holds and rep.clauses["positive_part_regular"] and not rep.clauses["second_bound"]
    assert check_cor4(build_disjoint_copies(2, K(2)), build_disjoint_copies(2, K(2))).holds
    assert check_cor4(build_independent(6), build_star(5)).holds
    assert check_cor4(build_independent(6), K(6)).holds


def test_cor4_second_clause():
    # positive part not regular: a star plus an edge against a matching
    g1 = disjoint_union(build_star(2), disjoint_union(K(2), build_independent(3)))
    g2 = build_disjoint_copies(4, K(2))
    rep = check_cor4(g1, g2)
    assert not rep.clauses["first_bound"] or rep.clauses["second_bound"]
    assert rep.holds


def test_katerinis_examples():
    assert check_katerinis(build_disjoint_copies(4, K(2)), build_cycle_edges(8)).holds
    rep = check_katerinis(disjoint_union(K(2), K(1)), build_independent(3))
    assert not rep.holds and not rep.clauses["min_degree_positive"]
    assert not check_katerinis(build_cycle_edges(5), build_cycle_edges(5)).holds


def test_katerinis_exact_arithmetic():
    for n in range(1, 7):
        gs = enumerate_graphs(n)
        for g1, g2 in itertools.product(gs, gs[::3]):
            d1, m1, d2 = max_degree(g1), min_degree(g1), max_degree(g2)
            want = m1 >= 1 and Fraction(m1 + d1, m1) * (d2 + 1) <= n and Fraction(m1 + d1, m1) * (m1 + d1 - 3) < n
            assert check_katerinis(g1, g2).holds == want


def test_katerinis_assignment():
    g1, g2 = build_disjoint_copies(4, K(2)), build_cycle_edges(8)
    for phi in sample_phis(8, 20, seed=1):
        assert katerinis_assignment_packs(g1, g2, phi)
    assert len(sample_phis(5, 20, 0)) == 21 and sample_phis(5, 20, 0)[0] == list(range(5))
    assert sample_phis(6, 3, 9) == sample_phis(6, 3, 9)


def test_g_value_dichotomy_and_bec_implies_main():
    for n in range(1, 7):
        gs = enumerate_graphs(n)
        for g1, g2 in itertools.product(gs, gs):
            if g1.num_edges:
                g = g_value(g1, g2)
                assert g in (0, max_degree(g2) - 1)
                assert (g == 0) == (max_degree(g1) == delta_plus(g1)) or max_degree(g2) == 1
            if check_bec(g1, g2).holds:
                assert check_main(g1, g2).holds


def test_size_mismatch():
    for fn in (check_bec, check_main, check_cor4, check_katerinis):
        with pytest.raises(SizeMismatch):
            fn(K(2), K(3))


def test_theorem5_examples():
    rep = check_theorem5_hypothesis(build_cycle_edges(4), build_disjoint_copies(2, K(2)))
    assert rep.holds and rep.quantities["k"] == 2
    rep = check_theorem5_hypothesis(*F3)
    assert rep.holds and rep.clauses["exception_clause_active"]
    with pytest.raises(NotRegular):
        check_theorem5_hypothesis(build_path_edges(2), build_independent(3))
    with pytest.raises(NotRegular):
        check_theorem5_hypothesis(build_independent(3), build_independent(3))


def test_theorem7():
    with pytest.raises(BadParameter):
        check_theorem7_hypothesis(build_cycle_edges(8), build_independent(8), 0)
    rep = check_theorem7_hypothesis(build_cycle_edges(8), build_disjoint_copies(4, K(2)), 2)
    assert rep.holds
    w, fac = positive_part_has_k_factor_realization(build_cycle_edges(8), 2)
    assert set(fac.degrees()) == {2} and all(w.has_edge(*e) for e in fac.edges())
    assert positive_part_has_k_factor_realization(build_star(3), 1) is None


def test_forest_embed_hypothesis_and_exceptions():
    rep = check_forest_embed(build_path_edges(2), build_cycle_edges(5))
    assert rep.holds
    assert not check_forest_embed(build_star(3), build_cycle_edges(4)).holds
    assert exceptions_report(*F1) == [{"tag": "F1", "params": {}}]
