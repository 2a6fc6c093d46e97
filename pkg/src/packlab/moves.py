"""Degree-preserving moves on realizations, and bad pairs between two graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidExchange, SizeMismatch
from .graph import Graph


@dataclass(frozen=True)
class EdgeExchangeSpec:
    """Replace edges ``vx`` and ``uy`` by the non-edges ``vy`` and ``ux``."""

    x: int
    y: int
    u: int
    v: int

    def removed(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.v, self.x), (self.u, self.y)

    def added(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.v, self.y), (self.u, self.x)


def check_exchange(g: Graph, spec: EdgeExchangeSpec) -> None:
    x, y, u, v = spec.x, spec.y, spec.u, spec.v
    for name, w in (("x", x), ("y", y), ("u", u), ("v", v)):
        if not 0 <= w < g.n:
            raise InvalidExchange("vertex", f"{name}={w} is not a vertex of the graph")
    if len({x, y, u, v}) != 4:
        raise InvalidExchange("distinct", f"vertices x={x}, y={y}, u={u}, v={v} are not distinct")
    if not g.has_edge(v, x):
        raise InvalidExchange("vx", f"{v}{x} is not an edge")
    if not g.has_edge(u, y):
        raise InvalidExchange("uy", f"{u}{y} is not an edge")
    if g.has_edge(v, y):
        raise InvalidExchange("vy", f"{v}{y} is already an edge")
    if g.has_edge(u, x):
        raise InvalidExchange("ux", f"{u}{x} is already an edge")


def edge_exchange(g: Graph, spec: EdgeExchangeSpec) -> Graph:
    check_exchange(g, spec)
    return g.with_edges(add=spec.added(), remove=spec.removed())


def vertex_interchange(g: Graph, u: int, v: int) -> Graph:
    """Swap the neighborhoods of ``u`` and ``v``.

    Equivalent to renaming by the transposition ``(u v)``, so an edge ``uv``
    stays in place and applying the move twice is the identity.
    """
    if u == v:
        return g
    perm = list(range(g.n))
    perm[u], perm[v] = v, u
    return g.relabel(perm)


def bad_pairs(g1: Graph, g2: Graph) -> list[tuple[int, int]]:
    """Edges common to both graphs, sorted; empty iff they pack as placed."""
    if g1.n != g2.n:
        raise SizeMismatch(f"graphs have orders {g1.n} and {g2.n}")
    common = Graph(g1.n, [a & b for a, b in zip(g1.adj, g2.adj)])
    return common.edges()


def bad_pair_count(g1: Graph, g2: Graph) -> int:
    return sum((a & b).bit_count() for a, b in zip(g1.adj, g2.adj)) // 2
