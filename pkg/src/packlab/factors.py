"""f-factors, forest embedding, and regular packing by factor growth."""

from __future__ import annotations

import time
from collections.abc import Iterable, Sequence

from . import _kernels
from .errors import BadParameter, BudgetExhausted, Infeasible, NoEmbedding, NotAForest, NotRegular, ParityViolation
from .graph import Graph, components, is_forest, is_regular, max_degree
from .packing import DEFAULT_BUDGET, Mode, PackingResult, SearchBudget, Status, pack_degrees


def find_f_factor(g: Graph, f: Sequence[int], budget: SearchBudget = DEFAULT_BUDGET) -> Graph:
    """Spanning subgraph of ``g`` with ``deg(v) = f[v]`` for every vertex."""
    if len(f) != g.n:
        raise BadParameter(f"f has {len(f)} entries for {g.n} vertices")
    for v, want in enumerate(f):
        if want < 0 or want > g.degree(v):
            raise Infeasible(f"f({v})={want} is outside 0..deg({v})={g.degree(v)}")
    if sum(f) % 2:
        raise ParityViolation(f"sum of f is {sum(f)}, which is odd")
    status, rows, _ = _kernels.ffactor(g.n, g.adj, list(f), budget.nodes, budget.deadline())
    if status == _kernels.BUDGET:
        raise BudgetExhausted("f-factor search ran out of budget")
    if status == _kernels.EXHAUSTED:
        raise Infeasible("no spanning subgraph has the requested degrees")
    return Graph(g.n, rows)


def has_f_factor(g: Graph, f: Sequence[int], budget: SearchBudget = DEFAULT_BUDGET) -> bool:
    try:
        find_f_factor(g, f, budget)
    except Infeasible:
        return False
    return True


# ---------------------------------------------------------------------------
# forests
# ---------------------------------------------------------------------------


def _forest_order(f: Graph) -> tuple[list[int], list[int]]:
    """BFS order tree by tree (largest trees first) and each vertex's parent."""
    comps = sorted(components(f), key=lambda c: (-len(c), c[0]))
    order: list[int] = []
    parent = [-1] * f.n
    for comp in comps:
        root = max(comp, key=lambda v: (f.degree(v), -v))
        queue = [root]
        seen = {root}
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in f.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    parent[w] = v
                    queue.append(w)
    return order, parent


def forest_embed(f: Graph, g: Graph, node_limit: int = 10**7) -> list[int]:
    """Injective map carrying every edge of forest ``f`` onto an edge of ``g``.

    Places trees one at a time in BFS order, each vertex on an unused
    neighbor of its parent's image, with full backtracking.
    """
    if not is_forest(f):
        raise NotAForest("pattern graph has a cycle")
    if f.n > g.n:
        raise NoEmbedding(f"forest has {f.n} vertices but host has only {g.n}")
    order, parent = _forest_order(f)
    fdeg = f.degrees()
    gdeg = g.degrees()
    image = [-1] * f.n
    nodes = 0

    def rec(i: int, used: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        nodes += 1
        if nodes > node_limit:
            raise BudgetExhausted("forest embedding ran out of budget")
        v = order[i]
        p = parent[v]
        cand = (g.adj[image[p]] if p >= 0 else (1 << g.n) - 1) & ~used
        while cand:
            b = cand & -cand
            cand ^= b
            t = b.bit_length() - 1
            if gdeg[t] < fdeg[v]:
                continue
            image[v] = t
            if rec(i + 1, used | b):
                return True
        image[v] = -1
        return False

    if not rec(0, 0):
        raise NoEmbedding("the forest is not a subgraph of the host")
    return image


# ---------------------------------------------------------------------------
# regular packing by factor growth
# ---------------------------------------------------------------------------


def _lift(h: Graph, vertices: Sequence[int], n: int) -> Graph:
    return h.relabel(list(vertices), n)


def pack_regular_by_factor_growth(
    g1_positive: Graph,
    g2: Graph,
    x_set: Iterable[int],
    budget: SearchBudget = DEFAULT_BUDGET,
) -> PackingResult:
    """Pack a ``k``-regular degree sequence into ``g2`` restricted to ``x_set``.

    Repeatedly adds a ``min(3, k - r)``-factor avoiding ``g2[X]`` and the
    factors chosen so far.  If growth stalls before ``r = k`` the exact
    sequence solver decides, and the result is flagged as an anomaly.
    The witness lives on ``g2``'s vertex set with all edges inside ``X``.
    """
    if not is_regular(g1_positive):
        raise NotRegular("positive part is not regular")
    xs = sorted(set(x_set))
    if len(xs) != g1_positive.n:
        raise BadParameter(f"|X|={len(xs)} but the regular graph has {g1_positive.n} vertices")
    if any(not 0 <= x < g2.n for x in xs):
        raise BadParameter("X contains a vertex outside g2")
    t0 = time.monotonic()
    k = max_degree(g1_positive)
    m = len(xs)
    z = g2.induced(xs)
    union = z
    grown = Graph(m)
    r = 0
    steps = []
    while r < k:
        step = min(3, k - r)
        try:
            fac = find_f_factor(union.complement(), [step] * m, budget)
        except Infeasible:
            break
        grown = grown.union(fac)
        union = union.union(fac)
        r += step
        steps.append(step)
    stats = {"route": "factor-growth", "steps": steps, "anomaly": False}
    if r == k:
        stats["seconds"] = time.monotonic() - t0
        return PackingResult(Status.PACKED, Mode.SEQUENCE, witness=_lift(grown, xs, g2.n), stats=stats)
    exact = pack_degrees([k] * m, z, budget)
    stats.update(route="factor-growth+exact", anomaly=exact.packed, stalled_at=r, nodes=exact.stats["nodes"])
    stats["seconds"] = time.monotonic() - t0
    witness = _lift(exact.witness, xs, g2.n) if exact.packed else None
    return PackingResult(exact.status, Mode.SEQUENCE, witness=witness, stats=stats)
