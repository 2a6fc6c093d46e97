"""Builders for the named graph families."""

from __future__ import annotations

from .errors import BadParameter
from .graph import Graph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameter(msg)


def build_independent(k: int) -> Graph:
    _need(k >= 0, "I^k needs k >= 0")
    return Graph(k)


def build_complete(k: int) -> Graph:
    _need(k >= 0, "K^k needs k >= 0")
    full = (1 << k) - 1
    return Graph(k, [full & ~(1 << v) for v in range(k)])


def build_complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 0 and b >= 0, "K^{a,b} needs a, b >= 0")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def build_cycle_edges(k: int) -> Graph:
    """Cycle with ``k`` edges (and ``k`` vertices)."""
    _need(k >= 3, "cycles need k >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def build_path_edges(k: int) -> Graph:
    """Path with ``k`` edges (and ``k + 1`` vertices)."""
    _need(k >= 0, "paths need k >= 0")
    return Graph.from_edges(k + 1, [(i, i + 1) for i in range(k)])


def build_star(t: int) -> Graph:
    """``K^{1,t}`` with center 0."""
    _need(t >= 0, "stars need t >= 0")
    return build_complete_bipartite(1, t)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` on ``0..n1-1`` followed by ``g2`` shifted by ``n1``."""
    return Graph(g1.n + g2.n, list(g1.adj) + [a << g1.n for a in g2.adj])


def build_disjoint_copies(c: int, g: Graph) -> Graph:
    _need(c >= 0, "copy count must be non-negative")
    out = Graph(0)
    for _ in range(c):
        out = disjoint_union(out, g)
    return out


def build_u2(l: int, t: int) -> Graph:
    """``l`` disjoint edges followed by a star ``K^{1,t}``."""
    _need(l >= 1 and t >= 1, "U2(l,t) needs l >= 1 and t >= 1")
    return disjoint_union(build_disjoint_copies(l, build_complete(2)), build_star(t))


def build_u3(l: int) -> Graph:
    """A 4-cycle through hub 0 plus ``l`` triangles sharing only the hub."""
    _need(l >= 0, "U3(l) needs l >= 0")
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    for i in range(l):
        a, b = 4 + 2 * i, 5 + 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(4 + 2 * l, edges)
