from __future__ import annotations

import itertools
import random

import pytest

from _oracles import achievable_degree_vectors, random_graph
from packlab.canon import enumerate_graphs
from packlab.errors import BadParameter, BudgetExhausted, Infeasible, NoEmbedding, NotAForest, NotRegular, ParityViolation
from packlab.families import build_complete, build_complete_bipartite, build_cycle_edges, build_disjoint_copies, build_independent, build_path_edges, build_star
from packlab.factors import find_f_factor, forest_embed, has_f_factor, pack_regular_by_factor_growth
from packlab.graph import Graph, is_forest
from packlab.packing import SearchBudget, Status


def test_f_factor_examples():
    assert find_f_factor(build_cycle_edges(5), [0] * 5).num_edges == 0
    m = find_f_factor(build_complete(4), [1] * 4)
    assert m.degrees() == [1] * 4
    with pytest.raises(Infeasible):
        find_f_factor(build_cycle_edges(5), [1] * 5)


def test_f_factor_errors():
    with pytest.raises(ParityViolation):
        find_f_factor(build_complete(4), [1, 1, 1, 0])
    with pytest.raises(Infeasible):
        find_f_factor(build_path_edges(2), [2, 0, 0])
    with pytest.raises(BadParameter):
        find_f_factor(build_complete(3), [1, 1])


def test_f_factor_is_subgraph_with_degrees():
    rng = random.Random(9)
    for _ in range(300):
        g = random_graph(rng, rng.randint(2, 10), rng.random())
        f = [rng.randint(0, g.degree(v)) for v in range(g.n)]
        if sum(f) % 2:
            continue
        try:
            h = find_f_factor(g, f)
        except Infeasible:
            continue
        assert h.degrees() == f
        assert all(g.has_edge(u, v) for u, v in h.edges())


def test_f_factor_matches_enumeration_n6_sample():
    gs = enumerate_graphs(6)
    for g in gs[::7]:
        ok = achievable_degree_vectors(g)
        for f in itertools.product(*(range(g.degree(v) + 1) for v in range(g.n))):
            if sum(f) % 2 == 0:
                assert has_f_factor(g, f) == (f in ok)


def test_forest_embed_examples():
    k2 = build_complete(2)
    image = forest_embed(k2, build_cycle_edges(5))
    assert build_cycle_edges(5).has_edge(*image)
    p = build_path_edges(2)
    c5 = build_cycle_edges(5)
    image = forest_embed(p, c5)
    assert all(c5.has_edge(image[a], image[b]) for a, b in p.edges())
    with pytest.raises(NoEmbedding):
        forest_embed(build_star(3), build_cycle_edges(4))
    with pytest.raises(NotAForest):
        forest_embed(build_cycle_edges(3), build_complete(4))
    with pytest.raises(NoEmbedding):
        forest_embed(build_independent(5), build_complete(4))


def test_forest_embed_minimum_degree_guarantee():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            delta = min(g.degrees())
            for m in range(n + 1):
                for f in enumerate_graphs(m):
                    if not is_forest(f) or f.num_edges > delta:
                        continue
                    image = forest_embed(f, g)
                    assert len(set(image)) == f.n
                    assert all(g.has_edge(image[a], image[b]) for a, b in f.edges())


def test_factor_growth_examples():
    m = build_disjoint_copies(2, build_complete(2))
    res = pack_regular_by_factor_growth(m, build_independent(4), range(4))
    assert res.packed and set(res.witness.degrees()) == {1}
    c4 = build_cycle_edges(4)
    two_k2 = build_disjoint_copies(2, build_complete(2))
    res = pack_regular_by_factor_growth(c4, two_k2, range(4))
    assert res.packed and res.stats["steps"] == [2]
    assert not any(two_k2.has_edge(u, v) for u, v in res.witness.edges())
    # a 1-regular target does pack with the 4-cycle host
    assert pack_regular_by_factor_growth(two_k2, build_complete_bipartite(2, 2), range(4)).packed
    # a 2-regular target on four vertices does not
    res = pack_regular_by_factor_growth(c4, build_complete_bipartite(2, 2), range(4))
    assert res.status is Status.UNPACKABLE and res.stats["route"] == "factor-growth+exact"


def test_factor_growth_large_k_uses_steps_of_three():
    k8 = build_complete(8).with_edges(remove=[(0, 1), (2, 3), (4, 5), (6, 7)])  # 6-regular
    g2 = Graph.from_edges(10, [(8, 9)])
    res = pack_regular_by_factor_growth(k8, g2, range(8))
    assert res.packed and res.stats["steps"] == [3, 3]
    assert res.witness.n == 10 and res.witness.degrees()[:8] == [6] * 8


def test_factor_growth_errors():
    with pytest.raises(NotRegular):
        pack_regular_by_factor_growth(build_path_edges(2), build_independent(3), range(3))
    with pytest.raises(BadParameter):
        pack_regular_by_factor_growth(build_cycle_edges(4), build_independent(5), range(3))


def test_f_factor_budget():
    g = build_complete_bipartite(5, 5)
    with pytest.raises(BudgetExhausted):
        find_f_factor(g, [3] * 10, SearchBudget(nodes=1))
