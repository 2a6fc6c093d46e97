from __future__ import annotations

import random
from collections import Counter

import networkx as nx
import pytest

from _oracles import all_labeled_graphs, random_graph, to_nx
from packlab.canon import canonical_form, canonical_key, enumerate_graphs, is_isomorphic, isomorphism
from packlab.errors import OrderTooLarge
from packlab.families import build_complete_bipartite, build_cycle_edges, build_disjoint_copies


def _atlas_counts() -> Counter:
    return Counter(g.number_of_nodes() for g in nx.graph_atlas_g())


def test_class_counts_against_atlas():
    atlas = _atlas_counts()
    for n in range(8):
        assert len(enumerate_graphs(n)) == atlas[n]


def test_class_counts_against_labeled_dedup():
    for n in range(6):
        keys = {canonical_key(g) for g in all_labeled_graphs(n)}
        assert len(keys) == len(enumerate_graphs(n))


def test_enumeration_is_deterministic_and_distinct():
    reps = enumerate_graphs(6)
    assert len({canonical_key(g) for g in reps}) == len(reps)
    assert [g.num_edges for g in reps] == sorted(g.num_edges for g in reps)
    assert enumerate_graphs(0)[0].n == 0
    assert len(enumerate_graphs(3)) == 4
    assert len(enumerate_graphs(4)) == 11


def test_order_cap(monkeypatch):
    monkeypatch.setenv("PACKLAB_MAX_ORDER", "5")
    with pytest.raises(OrderTooLarge):
        enumerate_graphs(6)


def test_small_examples():
    c5 = build_cycle_edges(5)
    assert canonical_key(c5) == canonical_key(c5.relabel([2, 4, 1, 3, 0]))
    assert canonical_key(build_cycle_edges(6)) != canonical_key(build_disjoint_copies(2, build_cycle_edges(3)))
    assert canonical_key(build_complete_bipartite(3, 3)) != canonical_key(build_cycle_edges(6))


def test_permutation_invariance():
    rng = random.Random(11)
    for n in range(1, 8):
        for g in enumerate_graphs(n)[:: max(1, len(enumerate_graphs(n)) // 25)]:
            key = canonical_key(g)
            for _ in range(100):
                perm = list(range(n))
                rng.shuffle(perm)
                assert canonical_key(g.relabel(perm)) == key


def test_agrees_with_networkx_isomorphism():
    rng = random.Random(5)
    for _ in range(400):
        n = rng.randint(1, 8)
        g, h = random_graph(rng, n), random_graph(rng, n)
        expect = nx.is_isomorphic(to_nx(g), to_nx(h))
        assert is_isomorphic(g, h) == expect
        m = isomorphism(g, h)
        assert (m is not None) == expect
        if m is not None:
            assert g.relabel(m) == h


def test_labeling_gives_canonical_graph():
    rng = random.Random(2)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 9))
        cf = canonical_form(g)
        inv = [0] * g.n
        for i, v in enumerate(cf.labeling):
            inv[v] = i
        assert g.relabel(inv) == cf.canonical_graph()
