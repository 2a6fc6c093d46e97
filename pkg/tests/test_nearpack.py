from __future__ import annotations

import pytest

from packlab.canon import enumerate_graphs
from packlab.degseq import DegreeSequence, degree_sequence
from packlab.errors import NoEdges, NotAchievable, NotGraphical
from packlab.families import build_complete, build_complete_bipartite, build_cycle_edges, build_disjoint_copies, build_independent, build_path_edges, disjoint_union
from packlab.hypotheses import check_main
from packlab.graph import Graph, delta_plus, independence_number
from packlab.moves import bad_pair_count, bad_pairs
from packlab.nearpack import NearPacking, exchange_repair, merge_components, near_packing, realization_with_independent_set
from packlab.packing import SearchBudget, Status

K = build_complete


def test_single_edge():
    np_ = near_packing(K(2), K(2))
    assert np_.h == K(2) and bad_pair_count(np_.h, K(2)) == 1
    assert np_.is_valid(K(2), 1)


def test_packable_pair_gives_zero_bad_pairs():
    g1, g2 = build_cycle_edges(5), build_cycle_edges(5)
    np_ = near_packing(g1, g2)
    assert bad_pairs(np_.h, g2) == []
    assert np_.is_valid(g2, delta_plus(g1))


def test_f1_near_packing():
    g1 = disjoint_union(build_cycle_edges(5), K(1))
    g2 = build_disjoint_copies(2, K(3))
    np_ = near_packing(g1, g2)
    assert np_.is_valid(g2, 2)
    assert bad_pair_count(np_.h, g2) >= 1
    assert degree_sequence(np_.h) == degree_sequence(g1)


def test_no_edges():
    with pytest.raises(NoEdges):
        near_packing(build_independent(3), K(3))


def test_construction_is_structurally_valid():
    for n in range(2, 7):
        gs = enumerate_graphs(n)
        for g1 in gs[1::3]:
            for g2 in gs[::5]:
                if not check_main(g1, g2).holds:
                    continue
                np_ = near_packing(g1, g2, settle=False)
                assert np_ is not None
                assert degree_sequence(np_.h) == degree_sequence(g1)
                assert np_.is_valid(g2, delta_plus(g1))


def test_repair_examples():
    g2 = Graph.from_edges(4, [(1, 2)])
    path = build_path_edges(3)
    res = exchange_repair(NearPacking(path, 1), g2)
    assert res.status is Status.PACKED and bad_pair_count(res.witness, g2) == 0
    assert res.stats["moves"]
    done = exchange_repair(NearPacking(path, 0), build_independent(4))
    assert done.status is Status.PACKED and done.stats["moves"] == []


def test_repair_never_claims_unpackable():
    g1 = build_disjoint_copies(3, K(2))
    g2 = build_complete_bipartite(3, 3)
    np_ = near_packing(g1, g2)
    res = exchange_repair(np_, g2, SearchBudget(nodes=10**5))
    assert res.status is Status.BUDGET_EXHAUSTED and res.witness is None


def test_repair_witness_is_disjoint():
    for n in range(3, 6):
        gs = enumerate_graphs(n)
        for g1 in gs[1:]:
            for g2 in gs[::4]:
                if not check_main(g1, g2).holds:
                    continue
                res = exchange_repair(near_packing(g1, g2, settle=False), g2, SearchBudget(nodes=20000))
                if res.packed:
                    assert bad_pair_count(res.witness, g2) == 0
                    assert degree_sequence(res.witness) == degree_sequence(g1)


def test_independent_set_realizations():
    h = realization_with_independent_set([2] * 7, 3)
    assert independence_number(h) >= 3 and set(h.degrees()) == {2}
    assert realization_with_independent_set([1, 1], 1) == K(2)
    with pytest.raises(NotAchievable):
        realization_with_independent_set([3, 3, 3, 3], 2)
    with pytest.raises(NotGraphical):
        realization_with_independent_set([3, 1], 1)


def test_independent_set_matches_exhaustive():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            s = degree_sequence(g)
            best = max(independence_number(h) for h in enumerate_graphs(n) if degree_sequence(h) == s)
            for k in range(1, n + 1):
                if k <= best:
                    h = realization_with_independent_set(s, k)
                    assert degree_sequence(h) == s and independence_number(h) >= k
                else:
                    with pytest.raises(NotAchievable):
                        realization_with_independent_set(s, k)


def test_merge_keeps_degrees_and_joins_cycles():
    h = disjoint_union(build_cycle_edges(3), disjoint_union(build_cycle_edges(4), build_path_edges(3)))
    merged = merge_components(h)
    assert merged.degrees() == h.degrees()
    assert independence_number(merged) >= independence_number(h)
    assert merge_components(DegreeSequence and K(2)) == K(2)
