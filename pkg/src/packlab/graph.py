"""Simple undirected graphs on vertices ``0..n-1`` stored as bitmask rows."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import BadParameter, NoPositiveVertex


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


class Graph:
    """Immutable labeled simple graph.

    ``adj[v]`` is an int whose bit ``w`` is set iff ``vw`` is an edge.
    Equality and hashing are labeled (not up to isomorphism).
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int] | None = None) -> None:
        if n < 0:
            raise BadParameter("vertex count must be non-negative")
        if adj is None:
            rows = (0,) * n
        else:
            rows = tuple(int(a) for a in adj)
            if len(rows) != n:
                raise BadParameter(f"expected {n} adjacency rows, got {len(rows)}")
            full = (1 << n) - 1
            for v, a in enumerate(rows):
                if a & ~full or a < 0:
                    raise BadParameter(f"row {v} names a vertex outside 0..{n - 1}")
                if a >> v & 1:
                    raise BadParameter(f"self-loop at {v}")
            for v, a in enumerate(rows):
                for w in _bits(a):
                    if not rows[w] >> v & 1:
                        raise BadParameter(f"asymmetric adjacency between {v} and {w}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadParameter(f"edge {u}{v} outside 0..{n - 1}")
            if u == v:
                raise BadParameter(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    # -- basic access ------------------------------------------------------

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        out = []
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    # -- derived graphs ----------------------------------------------------

    def with_edges(self, add: Iterable[tuple[int, int]] = (), remove: Iterable[tuple[int, int]] = ()) -> Graph:
        adj = list(self.adj)
        for u, v in remove:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        for u, v in add:
            if u == v:
                raise BadParameter(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, adj)

    def relabel(self, perm: Sequence[int], n: int | None = None) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``.

        ``n`` may exceed ``self.n`` to place the graph inside a larger
        vertex set; ``perm`` must be injective.
        """
        size = self.n if n is None else n
        if len(set(perm)) != len(perm) or len(perm) != self.n:
            raise BadParameter("relabeling must be injective on all vertices")
        adj = [0] * size
        for v in range(self.n):
            m = 0
            for w in _bits(self.adj[v]):
                m |= 1 << perm[w]
            adj[perm[v]] = m
        return Graph(size, adj)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced by ``vertices``, renamed ``0..k-1`` in sorted order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            m = 0
            for w in _bits(self.adj[v]):
                if w in pos:
                    m |= 1 << pos[w]
            adj.append(m)
        return Graph(len(vs), adj)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, [full & ~a & ~(1 << v) for v, a in enumerate(self.adj)])

    def union(self, other: Graph) -> Graph:
        """Edge union of two graphs on the same vertex set."""
        if other.n != self.n:
            raise BadParameter("edge union needs equal vertex counts")
        return Graph(self.n, [a | b for a, b in zip(self.adj, other.adj)])

    def padded(self, n: int) -> Graph:
        """The same graph with isolated vertices appended up to order ``n``."""
        if n < self.n:
            raise BadParameter(f"cannot pad order {self.n} down to {n}")
        return Graph(n, list(self.adj) + [0] * (n - self.n))

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# structural queries
# ---------------------------------------------------------------------------


def max_degree(g: Graph) -> int:
    return max((a.bit_count() for a in g.adj), default=0)


def min_degree(g: Graph) -> int:
    return min((a.bit_count() for a in g.adj), default=0)


def positive_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.adj[v]]


def delta_plus(g: Graph) -> int:
    """Smallest positive degree."""
    pos = [a.bit_count() for a in g.adj if a]
    if not pos:
        raise NoPositiveVertex("graph has no edges, so no positive degree")
    return min(pos)


def positive_part(g: Graph) -> Graph:
    """Subgraph induced by the vertices of positive degree."""
    pv = positive_vertices(g)
    if not pv:
        raise NoPositiveVertex("graph has no edges, so its positive part is empty")
    return g.induced(pv)


def complement(g: Graph) -> Graph:
    return g.complement()


def components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(_bits(comp))
    return out


def component_count(g: Graph) -> int:
    return len(components(g))


def is_connected(g: Graph) -> bool:
    return component_count(g) == 1


def is_forest(g: Graph) -> bool:
    return g.num_edges == g.n - component_count(g)


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) <= 1


def _max_independent(adj: Sequence[int], cand: int) -> int:
    # branch on a maximum-degree candidate: either exclude it, or take it
    if not cand:
        return 0
    best_v, best_d = -1, -1
    for v in _bits(cand):
        d = (adj[v] & cand).bit_count()
        if d > best_d:
            best_v, best_d = v, d
    if best_d == 0:
        return cand.bit_count()
    b = 1 << best_v
    take = 1 + _max_independent(adj, cand & ~b & ~adj[best_v])
    if best_d <= 1:
        return take
    skip = _max_independent(adj, cand & ~b)
    return max(take, skip)


def independence_number(g: Graph) -> int:
    return _max_independent(g.adj, (1 << g.n) - 1)


def max_independent_set(g: Graph) -> list[int]:
    """A maximum independent set (lexicographically first among the largest)."""
    target = independence_number(g)
    chosen: list[int] = []
    cand = (1 << g.n) - 1
    for v in range(g.n):
        if not cand >> v & 1:
            continue
        rest = cand & ~(1 << v) & ~g.adj[v]
        if 1 + _max_independent(g.adj, rest) + len(chosen) >= target:
            chosen.append(v)
            cand = rest
        else:
            cand &= ~(1 << v)
    return chosen


def find_clique(g: Graph, size: int) -> list[int] | None:
    """Lexicographically first clique with ``size`` vertices, or None."""
    if size <= 0:
        return []

    def rec(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == size:
            return chosen
        if cand.bit_count() < size - len(chosen):
            return None
        for v in _bits(cand):
            r = rec(chosen + [v], cand & g.adj[v] & ~((2 << v) - 1))
            if r is not None:
                return r
        return None

    return rec([], (1 << g.n) - 1)


def clique_number(g: Graph) -> int:
    k = 0
    while find_clique(g, k + 1) is not None:
        k += 1
    return k
