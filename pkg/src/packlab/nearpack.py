"""Near-packings, local exchange repair, and realizations with large independent sets."""

from __future__ import annotations

import itertools
import time
from collections.abc import Iterable
from dataclasses import dataclass

from .degseq import DegreeSequence, anchored_realize, degree_sequence, havel_hakimi_realize, is_graphical
from .errors import BudgetExhausted, NoEdges, NotAchievable, NotGraphical
from .graph import Graph, components, independence_number, max_degree
from .moves import bad_pair_count, bad_pairs, vertex_interchange
from .packing import DEFAULT_BUDGET, Mode, PackingResult, SearchBudget, Status, pack_degrees, same_order


@dataclass(frozen=True)
class NearPacking:
    """Realization ``h`` whose common edges with ``g2`` all touch ``y``."""

    h: Graph
    y: int

    def is_valid(self, g2: Graph, target_degree: int | None = None) -> bool:
        if any(self.y not in e for e in bad_pairs(self.h, g2)):
            return False
        return target_degree is None or self.h.degree(self.y) == target_degree


def near_packing(g1: Graph, g2: Graph, budget: SearchBudget = DEFAULT_BUDGET, settle: bool = True) -> NearPacking | None:
    """Near-packing anchored at a vertex of smallest positive degree.

    Strips the anchor's edges from an anchored realization, packs the
    reduced sequence (recursively, then by repair, then exactly), and
    reattaches a fresh isolated vertex to vertices whose degree is one
    short.  If that fails, an exact search with all bad pairs allowed at a
    single vertex is tried for each possible anchor.  With ``settle`` a
    constructed near-packing that still has bad pairs is replaced by an
    exact packing when one exists.
    """
    same_order(g1, g2)
    if g1.num_edges == 0:
        raise NoEdges("g1 has no edges")
    seq = degree_sequence(g1)
    np_ = _construct(seq, g2, budget, time.monotonic() + budget.seconds)
    if np_ is None:
        np_ = _exact_near_packing(seq, g2, budget)
    if settle and np_ is not None and bad_pair_count(np_.h, g2):
        res = pack_degrees(seq.terms, g2, budget)
        if res.packed:
            dplus = seq.min_positive()
            y = min(v for v in range(g2.n) if res.witness.degree(v) == dplus)
            return NearPacking(res.witness, y)
    return np_


def _pack_reduced(seq: DegreeSequence, g2: Graph, budget: SearchBudget, deadline: float) -> Graph | None:
    if not any(seq.terms):
        return Graph(g2.n)
    inner = _construct(seq, g2, budget, deadline)
    if inner is not None:
        rep = exchange_repair(inner, g2, budget)
        if rep.packed:
            return rep.witness
    res = pack_degrees(seq.terms, g2, budget)
    return res.witness if res.packed else None


def _construct(seq: DegreeSequence, g2: Graph, budget: SearchBudget, deadline: float) -> NearPacking | None:
    if time.monotonic() > deadline:
        return None
    dplus = seq.min_positive()
    f, y = anchored_realize(seq, dplus)
    targets = sorted((f.degree(w) for w in f.neighbors(y)), reverse=True)
    reduced = f.with_edges(remove=[(y, w) for w in f.neighbors(y)])
    h = _pack_reduced(degree_sequence(reduced), g2, budget, deadline)
    if h is None:
        return None
    return _reattach(h, targets, g2)


def _reattach(h: Graph, targets: list[int], g2: Graph) -> NearPacking | None:
    # choose an isolated vertex y' and, for each wanted degree d, a vertex of
    # degree d-1, minimising the number of new edges that lie in g2
    degs = h.degrees()
    best = None
    for yp in range(h.n):
        if degs[yp]:
            continue
        chosen = []
        used = {yp}
        cost = 0
        ok = True
        for d in targets:
            cands = [w for w in range(h.n) if w not in used and degs[w] == d - 1]
            if not cands:
                ok = False
                break
            w = min(cands, key=lambda w: (g2.has_edge(yp, w), w))
            cost += g2.has_edge(yp, w)
            used.add(w)
            chosen.append(w)
        if ok and (best is None or cost < best[0]):
            best = (cost, yp, chosen)
    if best is None:
        return None
    _, yp, chosen = best
    return NearPacking(h.with_edges(add=[(yp, w) for w in chosen]), yp)


def _exact_near_packing(seq: DegreeSequence, g2: Graph, budget: SearchBudget) -> NearPacking | None:
    dplus = seq.min_positive()
    n = g2.n
    ran_out = False
    for y in range(n):
        # allow every pair at y by removing y's edges from the forbidden graph
        adj = list(g2.adj)
        for w in range(n):
            adj[w] &= ~(1 << y)
        adj[y] = 0
        fixed = [-1] * n
        fixed[y] = dplus
        res = pack_degrees(seq.terms, Graph(n, adj), budget, fixed=fixed)
        if res.packed:
            return NearPacking(res.witness, y)
        ran_out = ran_out or res.status is Status.BUDGET_EXHAUSTED
    if ran_out:
        raise BudgetExhausted("near-packing search ran out of budget")
    return None


# ---------------------------------------------------------------------------
# exchange repair
# ---------------------------------------------------------------------------


def _edge_set(g: Graph) -> set[tuple[int, int]]:
    return set(g.edges())


def _norm(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _apply(g: Graph, remove, add) -> Graph | None:
    es = _edge_set(g)
    rem = {_norm(*e) for e in remove}
    new = [_norm(*e) for e in add]
    if any(a == b for a, b in new) or len(set(new)) != len(new):
        return None
    if not rem <= es:
        return None
    if any(e in es - rem for e in new) or set(new) & rem:
        return None
    return g.with_edges(add=new, remove=list(rem))


def _isolate_swaps(h: Graph, y: int):
    degs = h.degrees()
    for z in range(h.n):
        if z != y and degs[z] == 0 and degs[y] > 0:
            yield vertex_interchange(h, y, z)


def _two_exchanges(h: Graph, bad: list[tuple[int, int]]):
    edges = h.edges()
    for a, b in bad:
        for c, d in edges:
            if {c, d} & {a, b}:
                continue
            for p, q in ((a, b), (b, a)):
                for r, s in ((c, d), (d, c)):
                    g = _apply(h, [(p, q), (r, s)], [(p, r), (q, s)])
                    if g is not None:
                        yield g


def _three_exchanges(h: Graph, bad: list[tuple[int, int]]):
    edges = h.edges()
    for a1, b1 in bad:
        for e2, e3 in itertools.permutations([e for e in edges if e != _norm(a1, b1)], 2):
            for a2, b2 in (e2, e2[::-1]):
                for a3, b3 in (e3, e3[::-1]):
                    g = _apply(h, [(a1, b1), (a2, b2), (a3, b3)], [(b1, a2), (b2, a3), (b3, a1)])
                    if g is not None:
                        yield g


def _interchanges(h: Graph):
    for u, v in itertools.combinations(range(h.n), 2):
        yield vertex_interchange(h, u, v)


def exchange_repair(np_: NearPacking, g2: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> PackingResult:
    """First-improvement local search on the number of common edges with ``g2``.

    Moves, tried in order: interchange of the anchor with an isolated
    vertex; two-edge exchanges involving a common edge; three-edge cyclic
    exchanges involving a common edge; arbitrary vertex interchanges.
    Every move keeps the degree multiset.  Ends PACKED at zero common
    edges, otherwise BUDGET_EXHAUSTED (never UNPACKABLE).
    """
    same_order(np_.h, g2)
    t0 = time.monotonic()
    deadline = t0 + budget.seconds
    h, y = np_.h, np_.y
    b = bad_pair_count(h, g2)
    evaluated = 0
    applied = []
    while b > 0:
        bad = bad_pairs(h, g2)
        improved = False
        families = (
            ("isolate-interchange", _isolate_swaps(h, y)),
            ("two-exchange", _two_exchanges(h, bad)),
            ("three-exchange", _three_exchanges(h, bad)),
            ("interchange", _interchanges(h)),
        )
        for name, gen in families:
            for cand in gen:
                evaluated += 1
                if evaluated > budget.nodes or time.monotonic() > deadline:
                    break
                nb = bad_pair_count(cand, g2)
                if nb < b:
                    h, b = cand, nb
                    applied.append(name)
                    improved = True
                    break
            if improved or evaluated > budget.nodes:
                break
        if not improved:
            break
    stats = {"nodes": evaluated, "seconds": time.monotonic() - t0, "moves": applied, "remaining_bad_pairs": b}
    if b == 0:
        return PackingResult(Status.PACKED, Mode.SEQUENCE, witness=h, stats=stats)
    return PackingResult(Status.BUDGET_EXHAUSTED, Mode.SEQUENCE, stats=stats)


# ---------------------------------------------------------------------------
# realizations with a large independent set
# ---------------------------------------------------------------------------


def _is_cycle_or_clique(h: Graph, comp: list[int], d1: int) -> bool:
    sub = h.induced(comp)
    degs = sub.degrees()
    if len(comp) >= 3 and all(d == 2 for d in degs):
        return True
    return len(comp) == d1 + 1 and all(d == d1 for d in degs) and d1 >= 1


def merge_components(h: Graph) -> Graph:
    """Merge cycle and ``K^{Δ+1}`` components into others by edge exchanges.

    With ``vv'`` inside such a component ``C`` and ``uu'`` outside, the
    edges ``uu'`` and ``vv'`` become ``uv`` and ``u'v'``, which joins two
    components and keeps every degree.  Stops when no such pair remains.
    """
    d1 = max_degree(h)
    while True:
        count = len(components(h))
        step = None
        for comp in components(h):
            if not _is_cycle_or_clique(h, comp, d1):
                continue
            inside = set(comp)
            inner = [e for e in h.edges() if e[0] in inside]
            outside = [e for e in h.edges() if e[0] not in inside and e[1] not in inside]
            for (v, vp), (u, up) in itertools.product(inner, outside):
                cand = h.with_edges(add=[(u, v), (up, vp)], remove=[(u, up), (v, vp)])
                # only accept a swap that really joins two components
                if len(components(cand)) < count:
                    step = cand
                    break
            if step is not None:
                break
        if step is None:
            return h
        h = step


def realization_with_independent_set(seq: DegreeSequence | Iterable[int], k: int, budget: SearchBudget = DEFAULT_BUDGET) -> Graph:
    """Realization of ``seq`` with an independent set of ``k`` vertices."""
    s = seq if isinstance(seq, DegreeSequence) else DegreeSequence(seq)
    if not is_graphical(s):
        raise NotGraphical(f"{s} is not graphical")
    h = havel_hakimi_realize(s)
    if k <= 0 or independence_number(h) >= k:
        return h
    h = merge_components(h)
    if independence_number(h) >= k:
        return h
    if k > s.n:
        raise NotAchievable(f"k={k} exceeds the number of vertices {s.n}")
    # exact: forbid every pair inside the first k vertices
    n = s.n
    block = (1 << k) - 1
    forbid = Graph(n, [(block & ~(1 << v)) if v < k else 0 for v in range(n)])
    res = pack_degrees(s.terms, forbid, budget)
    if res.status is Status.BUDGET_EXHAUSTED:
        raise BudgetExhausted("independent-set realization search ran out of budget")
    if not res.packed:
        raise NotAchievable(f"no realization of {s} has an independent set of size {k}")
    return res.witness
