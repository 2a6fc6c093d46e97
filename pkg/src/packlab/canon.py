"""Canonical forms and enumeration of graphs up to isomorphism."""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass

from . import _kernels
from .errors import BadParameter, OrderTooLarge
from .graph import Graph
from .graph6 import encode

DEFAULT_MAX_ORDER = 9


@dataclass(frozen=True)
class CanonicalForm:
    """``key`` is the graph6 text of the canonical graph.

    ``labeling[i]`` is the input vertex placed at canonical position ``i``.
    """

    key: bytes
    labeling: tuple[int, ...]

    def canonical_graph(self) -> Graph:
        from .graph6 import decode

        return decode(self.key)


def canonical_form(g: Graph) -> CanonicalForm:
    rows, order = _kernels.canon(g.n, g.adj)
    key = encode(Graph(g.n, rows)).encode("ascii")
    return CanonicalForm(key, tuple(order))


def canonical_key(g: Graph) -> bytes:
    return canonical_form(g).key


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


def isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A map ``m`` with ``g.relabel(m) == h``, or None if not isomorphic."""
    if g.n != h.n:
        return None
    cg, ch = canonical_form(g), canonical_form(h)
    if cg.key != ch.key:
        return None
    m = [0] * g.n
    for i in range(g.n):
        m[cg.labeling[i]] = ch.labeling[i]
    return m


def max_order() -> int:
    raw = os.environ.get("PACKLAB_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise BadParameter(f"PACKLAB_MAX_ORDER must be an integer, got {raw!r}") from None


def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of ``n``-vertex graphs.

    Representatives are canonical graphs, ordered by (edge count, key).
    """
    if n < 0:
        raise BadParameter("order must be non-negative")
    cap = max_order()
    if n > cap:
        raise OrderTooLarge(f"order {n} exceeds the enumeration cap {cap} (PACKLAB_MAX_ORDER)")
    return _enumerate(n)


@functools.lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    seen: dict[bytes, Graph] = {}
    for base in _enumerate(n - 1):
        deg = base.degrees()
        new = n - 1
        # every graph arises by adding a minimum-degree vertex to some
        # smaller class, so the added vertex may not exceed any degree
        for s in range(1 << (n - 1)):
            d = s.bit_count()
            if any(deg[v] + (s >> v & 1) < d for v in range(n - 1)):
                continue
            adj = list(base.adj) + [s]
            for v in range(n - 1):
                if s >> v & 1:
                    adj[v] |= 1 << new
            cf = canonical_form(Graph(n, adj))
            if cf.key not in seen:
                seen[cf.key] = cf.canonical_graph()
    return tuple(sorted(seen.values(), key=lambda g: (g.num_edges, encode(g))))
