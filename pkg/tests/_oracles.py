"""Independent brute-force oracles used by the tests."""

from __future__ import annotations

import itertools
from collections import Counter

import networkx as nx

from packlab.graph import Graph


def pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def all_labeled_graphs(n: int):
    ps = pairs(n)
    for mask in range(1 << len(ps)):
        yield Graph.from_edges(n, [ps[i] for i in range(len(ps)) if mask >> i & 1])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), [(index[a], index[b]) for a, b in h.edges()])


def edge_subsets(g: Graph):
    es = g.edges()
    for r in range(len(es) + 1):
        for sub in itertools.combinations(es, r):
            yield Graph.from_edges(g.n, sub)


def brute_embed(g1: Graph, g2: Graph) -> bool:
    """Some relabeling of g1 avoids every edge of g2."""
    e1 = g1.edges()
    for perm in itertools.permutations(range(g1.n)):
        if not any(g2.has_edge(perm[a], perm[b]) for a, b in e1):
            return True
    return False


def brute_sequence(g1: Graph, g2: Graph) -> bool:
    """Some subgraph of the complement of g2 has g1's degree multiset."""
    want = Counter(g1.degrees())
    m = g1.num_edges
    host = g2.complement().edges()
    for sub in itertools.combinations(host, m):
        deg = [0] * g1.n
        for a, b in sub:
            deg[a] += 1
            deg[b] += 1
        if Counter(deg) == want:
            return True
    return False


def component_sequences(g: Graph) -> list[tuple[int, ...]]:
    h = to_nx(g)
    return sorted(tuple(sorted((d for _, d in h.subgraph(c).degree()), reverse=True)) for c in nx.connected_components(h))


def brute_componentwise(g1: Graph, g2: Graph) -> bool:
    want = component_sequences(g1)
    host = g2.complement().edges()
    for sub in itertools.combinations(host, g1.num_edges):
        if component_sequences(Graph.from_edges(g1.n, sub)) == want:
            return True
    return False


def achievable_degree_vectors(g: Graph) -> set[tuple[int, ...]]:
    out = set()
    for sub in edge_subsets(g):
        out.add(tuple(sub.degrees()))
    return out


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [e for e in pairs(n) if rng.random() < p])
