"""Equitable colorings read off a packing with a union of cliques."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameter, DegreeTooHigh, PackingFailed
from .families import build_complete, build_independent, disjoint_union
from .graph import Graph, max_degree
from .packing import DEFAULT_BUDGET, SearchBudget, pack_embed


@dataclass(frozen=True)
class EquitableColoring:
    classes: tuple[tuple[int, ...], ...]

    def is_valid(self, g: Graph) -> bool:
        seen = sorted(v for c in self.classes for v in c)
        if seen != list(range(g.n)):
            return False
        sizes = [len(c) for c in self.classes]
        if sizes and max(sizes) - min(sizes) > 1:
            return False
        return all(not g.has_edge(u, v) for c in self.classes for i, u in enumerate(c) for v in c[i + 1 :])


def clique_template(n: int, parts: int) -> tuple[Graph, list[list[int]]]:
    """``parts`` disjoint cliques on ``n`` vertices with sizes as equal as possible."""
    sizes = [n // parts + (1 if i < n % parts else 0) for i in range(parts)]
    t = Graph(0)
    blocks = []
    for s in sizes:
        blocks.append(list(range(t.n, t.n + s)))
        t = disjoint_union(t, build_complete(s) if s else build_independent(0))
    return t, blocks


def equitable_coloring_via_packing(g: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> EquitableColoring:
    """Equitable ``(k+1)``-coloring of ``g`` for ``k >= max_degree(g)``.

    The complement of ``g`` must contain the clique template, so ``g``
    packs with it; each template clique lands on an independent set of ``g``.
    """
    if k < 0:
        raise BadParameter("k must be non-negative")
    if max_degree(g) > k:
        raise DegreeTooHigh(f"maximum degree {max_degree(g)} exceeds k={k}")
    template, blocks = clique_template(g.n, k + 1)
    res = pack_embed(template, g, budget)
    if not res.packed:
        raise PackingFailed(f"clique template did not pack with g ({res.status.value})")
    m = res.mapping
    classes = tuple(tuple(sorted(m[v] for v in b)) for b in blocks)
    return EquitableColoring(classes)
