from __future__ import annotations

import itertools

import pytest

from packlab.canon import enumerate_graphs
from packlab.errors import DecompositionNotFound, HypothesisUnmet
from packlab.families import (
    build_complete,
    build_complete_bipartite,
    build_cycle_edges,
    build_disjoint_copies,
    build_independent,
    build_path_edges,
    build_star,
    build_u3,
    disjoint_union,
)
from packlab.graph import Graph
from packlab.hypotheses import check_bec
from packlab.packing import Mode, Status, validate_witness
from packlab.pipelines import (
    pipeline_large_matching,
    pipeline_lemma9,
    pipeline_split,
    pipeline_theorem5,
    pipeline_theorem7,
    pipeline_theorem10,
    pipeline_theorem12,
    unigraph_forest_splits,
)
from packlab.pipelines import _independent_set_route
from packlab.packing import DEFAULT_BUDGET

K = build_complete
I = build_independent


def _packed(res, g1, g2):
    assert res.status is Status.PACKED, res.stats
    assert validate_witness(res, g1, g2) == []
    assert res.stats["anomaly"] is False


def test_lemma9_example():
    g1 = disjoint_union(build_cycle_edges(4), I(3))
    g2 = disjoint_union(build_path_edges(2), build_path_edges(3))
    res = pipeline_lemma9(g1, g2)
    _packed(res, g1, g2)
    assert res.mode is Mode.COMPONENT_WISE and res.stats["route"] == "lemma9"


def test_lemma9_errors():
    g1 = disjoint_union(build_cycle_edges(4), I(1))
    with pytest.raises(HypothesisUnmet):
        pipeline_lemma9(g1, build_cycle_edges(5))
    with pytest.raises(DecompositionNotFound):
        pipeline_lemma9(g1, build_cycle_edges(5), forest_vertices=[0, 4])
    with pytest.raises(DecompositionNotFound):
        pipeline_lemma9(g1, build_cycle_edges(5), forest_vertices=[0, 1, 2, 3])


def test_lemma9_core_must_pack():
    # K5 has no copy in the complement of 3K3, and it is the only connected realization of its sequence
    g1 = disjoint_union(K(5), I(4))
    g2 = build_disjoint_copies(3, K(3))
    with pytest.raises(HypothesisUnmet):
        pipeline_lemma9(g1, g2)


def test_theorem12_example():
    g1 = disjoint_union(build_u3(0), I(4))
    for g2 in enumerate_graphs(8)[::97]:
        if max(g2.degrees()) != 2 or not check_bec(g1, g2).holds:
            continue
        res = pipeline_theorem12(g1, g2)
        _packed(res, g1, g2)
        assert res.mode is Mode.EMBED and g1.relabel(res.mapping) == res.witness


def test_theorem12_routes():
    g2 = build_disjoint_copies(4, K(2))
    forest = disjoint_union(build_path_edges(3), I(4))
    res = pipeline_theorem12(forest, g2)
    _packed(res, forest, g2)
    assert res.stats["route"] == "forest"
    with pytest.raises(DecompositionNotFound):
        pipeline_theorem12(disjoint_union(build_cycle_edges(6), I(2)), I(8))
    with pytest.raises(HypothesisUnmet):
        pipeline_theorem12(disjoint_union(build_cycle_edges(5), K(1)), build_disjoint_copies(2, K(3)))


def test_theorem12_independent_set_route():
    # K4 core with a dominating vertex, forest with one component and few edges, Δ2 = 3
    g1 = disjoint_union(K(4), disjoint_union(build_path_edges(1), I(10)))
    g2 = build_disjoint_copies(4, K(4))
    assert check_bec(g1, g2).holds
    res = pipeline_theorem12(g1, g2)
    _packed(res, g1, g2)
    assert res.stats["route"] in {"lemma9", "independent-set"}


def test_unigraph_forest_splits_order():
    g1 = disjoint_union(build_cycle_edges(5), disjoint_union(build_star(2), I(1)))
    splits = unigraph_forest_splits(g1)
    assert splits[0] == ([0, 1, 2, 3, 4], [5, 6, 7, 8])


def test_theorem10():
    g1 = disjoint_union(K(4), I(8))
    g2 = build_disjoint_copies(6, K(2))
    res = pipeline_theorem10(g1, g2)
    _packed(res, g1, g2)
    assert res.stats["route"] == "max-degree-two"
    g1 = disjoint_union(K(4), I(11))
    g2 = disjoint_union(build_disjoint_copies(3, K(4)), I(3))
    res = pipeline_theorem10(g1, g2)
    _packed(res, g1, g2)
    assert res.stats["route"] == "lemma9"
    with pytest.raises(DecompositionNotFound):
        pipeline_theorem10(disjoint_union(build_cycle_edges(5), I(3)), I(8))
    with pytest.raises(HypothesisUnmet):
        pipeline_theorem10(disjoint_union(K(4), I(2)), build_disjoint_copies(2, K(3)))


def test_independent_set_route():
    # forest on an independent set of g2 of size delta1+1, core packed on the rest
    g1 = disjoint_union(K(4), build_star(3))
    g2 = disjoint_union(K(2), I(6))
    w = _independent_set_route(g1, g2, [0, 1, 2, 3], [4, 5, 6, 7], DEFAULT_BUDGET, embed=False)
    assert w is not None and not any(g2.has_edge(a, b) for a, b in w.edges())
    assert sorted(w.degrees()) == sorted(g1.degrees())
    # no independent set of size delta1+1
    assert _independent_set_route(g1, build_disjoint_copies(2, K(4)), [0, 1, 2, 3], [4, 5, 6, 7], DEFAULT_BUDGET, embed=True) is None


def test_theorem5_routes():
    g1 = disjoint_union(build_cycle_edges(6), I(2))
    g2 = build_disjoint_copies(4, K(2))
    res = pipeline_theorem5(g1, g2)
    _packed(res, g1, g2)
    assert res.stats["route"] == "thm3"
    circulant = Graph.from_edges(10, [(i, (i + j) % 10) for i in range(10) for j in (1, 2)])
    g1 = circulant
    g2 = build_cycle_edges(10)
    res = pipeline_theorem5(g1, g2)
    _packed(res, g1, g2)
    assert res.stats["route"] == "factor-growth"
    g1 = disjoint_union(build_cycle_edges(8), I(1))
    g2 = disjoint_union(build_disjoint_copies(3, K(3)), I(0))
    res = pipeline_theorem5(g1, g2)
    _packed(res, g1, g2)
    assert res.stats["route"] == "katerinis"


def test_theorem5_exception_and_errors():
    g1, g2 = build_disjoint_copies(3, K(2)), build_complete_bipartite(3, 3)
    res = pipeline_theorem5(g1, g2)
    assert res.status is Status.UNPACKABLE and res.stats["route"] == "exception"
    with pytest.raises(HypothesisUnmet):
        pipeline_theorem5(build_cycle_edges(4), K(4))
    with pytest.raises(HypothesisUnmet):
        pipeline_theorem5(disjoint_union(build_cycle_edges(4), I(2)), I(6), x_set=[0, 1, 2])


def test_theorem5_every_subset():
    g1 = disjoint_union(build_cycle_edges(6), I(2))
    g2 = disjoint_union(build_path_edges(3), build_cycle_edges(4))
    for xs in itertools.combinations(range(8), 6):
        res = pipeline_theorem5(g1, g2, x_set=xs)
        assert res.packed and all(a in xs and b in xs for a, b in res.witness.edges())
        assert not any(g2.has_edge(a, b) for a, b in res.witness.edges())


def test_theorem7():
    g1, g2 = build_cycle_edges(8), build_disjoint_copies(4, K(2))
    res = pipeline_theorem7(g1, g2, 2)
    _packed(res, g1, g2)
    fac = Graph.from_edges(8, [tuple(e) for e in res.stats["k_factor"]])
    assert set(fac.degrees()) == {2} and all(res.witness.has_edge(*e) for e in fac.edges())
    with pytest.raises(HypothesisUnmet):
        pipeline_theorem7(build_cycle_edges(4), build_disjoint_copies(2, K(2)), 2)


def test_large_matching():
    with pytest.raises(HypothesisUnmet):
        pipeline_large_matching(disjoint_union(build_star(2), build_disjoint_copies(1, K(2))), disjoint_union(build_cycle_edges(4), K(1)))
    g1 = disjoint_union(build_star(3), build_disjoint_copies(3, K(2)))
    g2 = build_disjoint_copies(5, K(2))
    res = pipeline_large_matching(g1, g2)
    _packed(res, g1, g2)
    assert res.stats["route"] == "large-matching"


def test_split_routes():
    g1 = disjoint_union(build_star(3), build_disjoint_copies(3, K(2)))
    g2 = build_disjoint_copies(5, K(2))
    res = pipeline_split(g1, g2)
    _packed(res, g1, g2)
    g1 = disjoint_union(build_star(2), disjoint_union(K(2), I(5)))
    g2 = disjoint_union(build_path_edges(2), disjoint_union(build_path_edges(2), I(4)))
    res = pipeline_split(g1, g2)
    _packed(res, g1, g2)
    with pytest.raises(DecompositionNotFound):
        pipeline_split(disjoint_union(build_cycle_edges(4), I(4)), I(8))
