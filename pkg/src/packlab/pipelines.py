"""Constructive packing pipelines that follow the compositional arguments.

Each pipeline checks its hypothesis, runs its construction, and records the
route taken in ``stats["route"]``.  Steps justified by an external packing
theorem (cycles and paths, forests) are carried out by the exact embedding
solver and recorded as such.  When a construction step fails where the
argument promises success, the exact solver decides instead and
``stats["anomaly"]`` is set.
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Iterable, Sequence

from .canon import isomorphism
from .degseq import degree_sequence
from .errors import BudgetExhausted, DecompositionNotFound, HypothesisUnmet, Infeasible, NoEmbedding, OrderTooLarge
from .factors import find_f_factor, forest_embed, pack_regular_by_factor_growth
from .graph import (
    Graph,
    components,
    is_connected,
    is_forest,
    is_regular,
    max_degree,
    max_independent_set,
    positive_part,
    positive_vertices,
)
from .hypotheses import check_bec, check_theorem5_hypothesis, check_theorem7_hypothesis, positive_part_has_k_factor_realization
from .packing import (
    DEFAULT_BUDGET,
    Mode,
    PackingResult,
    SearchBudget,
    Status,
    pack_component_wise,
    pack_degrees,
    pack_embed,
    pack_sequence,
    same_order,
)
from .recognizers import has_dominating_clique, is_split, is_unigraph, match_exceptions


def _lift(h: Graph, vertices: Sequence[int], n: int) -> Graph:
    return h.relabel(list(vertices), n)


def _result(status: Status, mode: Mode, witness: Graph | None, routes: list[str], t0: float, anomaly: bool = False, **extra) -> PackingResult:
    stats = {"route": "+".join(routes), "anomaly": anomaly, "seconds": time.monotonic() - t0}
    stats.update(extra)
    return PackingResult(status, mode, witness=witness, stats=stats)


class _Budgeted(Exception):
    pass


def _pack_terms_on(terms: Iterable[int], g2: Graph, vertices: Sequence[int], budget: SearchBudget) -> Graph | None:
    """Realization of ``terms`` on ``vertices`` avoiding ``g2``, lifted to all of ``g2``."""
    vs = list(vertices)
    t = list(terms)
    if len(t) > len(vs):
        return None
    t += [0] * (len(vs) - len(t))
    res = pack_degrees(t, g2.induced(vs), budget)
    if res.status is Status.BUDGET_EXHAUSTED:
        raise _Budgeted
    return _lift(res.witness, vs, g2.n) if res.packed else None


def _zero_vertices(h: Graph) -> list[int]:
    return [v for v in range(h.n) if not h.adj[v]]


def _tree_components(g: Graph) -> list[list[int]]:
    return [c for c in components(g) if is_forest(g.induced(c))]


def _with_mapping(res: PackingResult, g1: Graph) -> PackingResult:
    if res.packed and res.witness is not None:
        res.mapping = isomorphism(g1, res.witness)
    return res


# ---------------------------------------------------------------------------
# forests attached to a component-wise packed core
# ---------------------------------------------------------------------------


def _check_forest_part(g1: Graph, forest_vertices: Iterable[int] | None) -> list[int]:
    if forest_vertices is None:
        return sorted(v for c in _tree_components(g1) for v in c)
    fv = sorted(set(forest_vertices))
    inside = set(fv)
    for c in components(g1):
        if inside.intersection(c) and not inside.issuperset(c):
            raise DecompositionNotFound("forest part must be a union of components")
    if not is_forest(g1.induced(fv)):
        raise DecompositionNotFound("forest part contains a cycle")
    return fv


def _attach_forest(core_witness: Graph, forest: Graph, g2: Graph) -> Graph:
    """Embed ``forest`` into the complement of ``g2`` on the core's isolated vertices."""
    xs = _zero_vertices(core_witness)
    host = g2.induced(xs).complement()
    image = forest_embed(forest, host)
    placed = forest.relabel([xs[i] for i in image], g2.n)
    return core_witness.union(placed)


def _lemma9_route(g1: Graph, g2: Graph, fv: list[int], budget: SearchBudget) -> Graph | None:
    """Core by the component-wise solver, forest by embedding; None if the core fails."""
    core_vs = [v for v in range(g1.n) if v not in set(fv)]
    core = g1.induced(core_vs).padded(g1.n)
    cw = pack_component_wise(core, g2, budget)
    if cw.status is Status.BUDGET_EXHAUSTED:
        raise _Budgeted
    if not cw.packed:
        return None
    return _attach_forest(cw.witness, g1.induced(fv), g2)


def pipeline_lemma9(g1: Graph, g2: Graph, forest_vertices: Iterable[int] | None = None, budget: SearchBudget = DEFAULT_BUDGET) -> PackingResult:
    """Component-wise packing of a core plus a forest with many components."""
    same_order(g1, g2)
    t0 = time.monotonic()
    fv = _check_forest_part(g1, forest_vertices)
    forest = g1.induced(fv)
    d2 = max_degree(g2)
    omega = len(components(forest)) if fv else 0
    if omega < d2 + 1:
        raise HypothesisUnmet(f"forest has {omega} components, needs at least {d2 + 1}")
    try:
        w = _lemma9_route(g1, g2, fv, budget)
    except _Budgeted:
        return _result(Status.BUDGET_EXHAUSTED, Mode.COMPONENT_WISE, None, ["lemma9"], t0)
    except NoEmbedding:
        exact = pack_component_wise(g1, g2, budget)
        return _result(exact.status, Mode.COMPONENT_WISE, exact.witness, ["lemma9", "exact"], t0, anomaly=exact.packed)
    if w is None:
        raise HypothesisUnmet("the core does not pack component-wise with g2")
    return _result(Status.PACKED, Mode.COMPONENT_WISE, w, ["lemma9"], t0)


# ---------------------------------------------------------------------------
# dominating clique plus forest
# ---------------------------------------------------------------------------


def _forest_clause(forest: Graph | None, d2: int) -> bool:
    if forest is None or forest.n == 0:
        return 2 * d2 - 1 >= 0 and d2 >= 1
    omega = len(components(forest))
    return omega >= d2 + 1 or forest.num_edges <= 2 * d2 - 1


def _independent_set_route(g1: Graph, g2: Graph, core_vs: list[int], fv: list[int], budget: SearchBudget, embed: bool) -> Graph | None:
    """Forest onto an independent set of ``g2``, core packed into the rest."""
    d1 = max_degree(g1)
    ind = max_independent_set(g2)
    if len(ind) < d1 + 1 or len(fv) > d1 + 1:
        return None
    xs = ind[: d1 + 1]
    forest = g1.induced(fv)
    placed = forest.relabel(xs[: len(fv)], g1.n)
    rest = [v for v in range(g1.n) if v not in set(xs)]
    core = g1.induced(core_vs)
    if core.n > len(rest):
        return None
    sub = g2.induced(rest)
    pattern = core.padded(len(rest))
    res = pack_embed(pattern, sub, budget) if embed else pack_component_wise(pattern, sub, budget)
    if res.status is Status.BUDGET_EXHAUSTED:
        raise _Budgeted
    if not res.packed:
        return None
    return placed.union(_lift(res.witness, rest, g1.n))


def _split_dominating(g1: Graph, forest_vertices) -> tuple[list[int], list[int]]:
    if forest_vertices is not None:
        fv = _check_forest_part(g1, forest_vertices)
        core_vs = [v for v in range(g1.n) if v not in set(fv)]
        if has_dominating_clique(g1.induced(core_vs)) is None or not core_vs:
            raise DecompositionNotFound("the non-forest part has no dominating clique")
        return core_vs, fv
    trees = _tree_components(g1)
    tree_vs = {v for c in trees for v in c}
    core_vs = [v for v in range(g1.n) if v not in tree_vs]
    if not core_vs:
        # all trees: use the largest tree with a dominating clique as the core
        for c in sorted(trees, key=lambda c: (-len(c), c[0])):
            if has_dominating_clique(g1.induced(c)) is not None:
                core_vs = list(c)
                break
    if not core_vs or has_dominating_clique(g1.induced(core_vs)) is None:
        raise DecompositionNotFound("no part with a dominating clique")
    fv = sorted(v for v in range(g1.n) if v not in set(core_vs))
    return core_vs, fv


def pipeline_theorem10(g1: Graph, g2: Graph, forest_vertices: Iterable[int] | None = None, budget: SearchBudget = DEFAULT_BUDGET) -> PackingResult:
    """Component-wise packing of a graph with a dominating clique plus a forest."""
    same_order(g1, g2)
    t0 = time.monotonic()
    core_vs, fv = _split_dominating(g1, forest_vertices)
    forest = g1.induced(fv)
    d1, d2 = max_degree(g1), max_degree(g2)
    if not check_bec(g1, g2).holds:
        raise HypothesisUnmet("product bound fails")
    omega = len(components(forest)) if fv else 0
    if not (omega >= d2 + 1 or forest.num_edges <= 2 * d2 - 1):
        raise HypothesisUnmet("forest has too few components and too many edges")
    routes: list[str] = []
    try:
        if min(d1, d2) <= 2:
            routes.append("max-degree-two")
            res = pack_embed(g1, g2, budget)
            if res.status is Status.BUDGET_EXHAUSTED:
                raise _Budgeted
            if res.packed:
                return _result(Status.PACKED, Mode.COMPONENT_WISE, res.witness, routes, t0)
        elif omega >= d2 + 1:
            routes.append("lemma9")
            w = _lemma9_route(g1, g2, fv, budget)
            if w is not None:
                return _result(Status.PACKED, Mode.COMPONENT_WISE, w, routes, t0)
        else:
            routes.append("independent-set")
            w = _independent_set_route(g1, g2, core_vs, fv, budget, embed=False)
            if w is not None:
                return _result(Status.PACKED, Mode.COMPONENT_WISE, w, routes, t0)
    except _Budgeted:
        return _result(Status.BUDGET_EXHAUSTED, Mode.COMPONENT_WISE, None, routes, t0)
    except NoEmbedding:
        pass
    routes.append("exact")
    exact = pack_component_wise(g1, g2, budget)
    return _result(exact.status, Mode.COMPONENT_WISE, exact.witness, routes, t0, anomaly=exact.packed)


# ---------------------------------------------------------------------------
# unigraph plus forest
# ---------------------------------------------------------------------------


def unigraph_forest_splits(g1: Graph) -> list[tuple[list[int], list[int]]]:
    """Partitions (unigraph part, forest part) of the components.

    The forest part is drawn from the tree components, most trees first.
    """
    trees = _tree_components(g1)
    tree_vs = {v for c in trees for v in c}
    base = [v for v in range(g1.n) if v not in tree_vs]
    out = []
    for r in range(len(trees), -1, -1):
        for chosen in itertools.combinations(range(len(trees)), r):
            fv = sorted(v for i in chosen for v in trees[i])
            hv = sorted(base + [v for i in range(len(trees)) if i not in chosen for v in trees[i]])
            try:
                ok = is_unigraph(g1.induced(hv))
            except OrderTooLarge:
                ok = False
            if ok:
                out.append((hv, fv))
    return out


def theorem12_split(g1: Graph, g2: Graph) -> tuple[list[int], list[int]] | None:
    """First unigraph/forest partition meeting the forest clause, or None."""
    d2 = max_degree(g2)
    for hv, fv in unigraph_forest_splits(g1):
        forest = g1.induced(fv)
        omega = len(components(forest)) if fv else 0
        if omega >= d2 + 1 or forest.num_edges <= 2 * d2 - 1:
            return hv, fv
    return None


def pipeline_theorem12(g1: Graph, g2: Graph, unigraph_vertices: Iterable[int] | None = None, budget: SearchBudget = DEFAULT_BUDGET) -> PackingResult:
    """Packing of a unigraph plus a forest (ordinary packing, with a mapping)."""
    same_order(g1, g2)
    t0 = time.monotonic()
    d1, d2 = max_degree(g1), max_degree(g2)
    if unigraph_vertices is not None:
        hv = sorted(set(unigraph_vertices))
        fv = _check_forest_part(g1, [v for v in range(g1.n) if v not in set(hv)])
        if not is_unigraph(g1.induced(hv)):
            raise DecompositionNotFound("the given part is not a unigraph")
        forest = g1.induced(fv)
        omega = len(components(forest)) if fv else 0
        if not (omega >= d2 + 1 or forest.num_edges <= 2 * d2 - 1):
            raise HypothesisUnmet("forest has too few components and too many edges")
    else:
        if not unigraph_forest_splits(g1):
            raise DecompositionNotFound("no unigraph/forest partition of the components")
        split = theorem12_split(g1, g2)
        if split is None:
            raise HypothesisUnmet("no partition meets the forest clause")
        hv, fv = split
    if not check_bec(g1, g2).holds:
        raise HypothesisUnmet("product bound fails")
    forest = g1.induced(fv)
    omega = len(components(forest)) if fv else 0
    h = g1.induced(hv)
    routes: list[str] = []

    def done(w: Graph) -> PackingResult:
        res = _result(Status.PACKED, Mode.EMBED, w, routes, t0)
        res.mapping = isomorphism(g1, w)
        if res.mapping is None:
            return None
        return res

    try:
        if h.num_edges == 0:
            routes.append("forest")
            res = pack_embed(g1, g2, budget)
            if res.status is Status.BUDGET_EXHAUSTED:
                raise _Budgeted
            if res.packed:
                return done(res.witness)
        elif omega >= d2 + 1:
            routes.append("lemma9")
            w = _lemma9_route(g1, g2, fv, budget)
            if w is not None:
                out = done(w)
                if out is not None:
                    return out
        elif min(d1, d2) <= 2:
            routes.append("max-degree-two")
            res = pack_embed(g1, g2, budget)
            if res.status is Status.BUDGET_EXHAUSTED:
                raise _Budgeted
            if res.packed:
                return done(res.witness)
        elif is_connected(h) and has_dominating_clique(h) is not None:
            routes.append("independent-set")
            w = _independent_set_route(g1, g2, hv, fv, budget, embed=True)
            if w is not None:
                out = done(w)
                if out is not None:
                    return out
    except _Budgeted:
        return _result(Status.BUDGET_EXHAUSTED, Mode.EMBED, None, routes, t0)
    except NoEmbedding:
        pass
    routes.append("exact")
    exact = pack_embed(g1, g2, budget)
    res = _result(exact.status, Mode.EMBED, exact.witness, routes, t0, anomaly=exact.packed)
    res.mapping = exact.mapping
    return res


# ---------------------------------------------------------------------------
# regular positive parts and k-factors
# ---------------------------------------------------------------------------


def _regular_into(k: int, m: int, z: Graph, xs: list[int], budget: SearchBudget, d2: int) -> tuple[Graph | None, str, bool]:
    """k-regular graph on ``xs`` avoiding ``z``; returns (lifted witness, route, anomaly)."""
    sub = z.induced(xs)
    if k == 1 or d2 <= 1:
        res = pack_degrees([k] * m, sub, budget)
        if res.status is Status.BUDGET_EXHAUSTED:
            raise _Budgeted
        return (_lift(res.witness, xs, z.n) if res.packed else None), "thm3", False
    if k <= d2 + 1:
        try:
            fac = find_f_factor(sub.complement(), [k] * m, budget)
            return _lift(fac, xs, z.n), "katerinis", False
        except BudgetExhausted:
            raise _Budgeted from None
        except Infeasible:
            res = pack_degrees([k] * m, sub, budget)
            if res.status is Status.BUDGET_EXHAUSTED:
                raise _Budgeted
            return (_lift(res.witness, xs, z.n) if res.packed else None), "katerinis+exact", res.packed
    reg = Graph(m, [((1 << m) - 1) & ~(1 << v) for v in range(m)]) if k == m - 1 else None
    pattern = reg if reg is not None else _any_regular(k, m)
    res = pack_regular_by_factor_growth(pattern, z, xs, budget)
    if res.status is Status.BUDGET_EXHAUSTED:
        raise _Budgeted
    return res.witness, "factor-growth", bool(res.stats.get("anomaly"))


def _any_regular(k: int, m: int) -> Graph:
    from .degseq import havel_hakimi_realize

    return havel_hakimi_realize([k] * m)


def pipeline_theorem5(g1: Graph, g2: Graph, x_set: Iterable[int] | None = None, budget: SearchBudget = DEFAULT_BUDGET) -> PackingResult:
    """Pack the regular positive part of ``g1`` into ``g2`` restricted to ``X``."""
    same_order(g1, g2)
    t0 = time.monotonic()
    hyp = check_theorem5_hypothesis(g1, g2)
    if not hyp.holds:
        raise HypothesisUnmet(f"positive part has {hyp.quantities['positive_order']} vertices, needs {hyp.quantities['bound']}")
    pp = positive_part(g1)
    k, m = max_degree(pp), pp.n
    xs = positive_vertices(g1) if x_set is None else sorted(set(x_set))
    if len(xs) != m:
        raise HypothesisUnmet(f"|X| must equal {m}")
    d2 = max_degree(g2)
    z = g2.induced(xs)
    if m == 2 * d2 and {e.tag for e in match_exceptions(pp, z)} & {"F3", "F4"}:
        res = pack_sequence(pp, z, budget)
        w = _lift(res.witness, xs, g2.n) if res.packed else None
        return _result(res.status, Mode.SEQUENCE, w, ["exception"], t0)
    try:
        w, route, anomaly = _regular_into(k, m, g2, xs, budget, d2)
    except _Budgeted:
        return _result(Status.BUDGET_EXHAUSTED, Mode.SEQUENCE, None, ["thm5"], t0)
    if w is None:
        return _result(Status.UNPACKABLE, Mode.SEQUENCE, None, [route], t0, anomaly=True)
    return _result(Status.PACKED, Mode.SEQUENCE, w, [route], t0, anomaly=anomaly)


def pipeline_theorem7(g1: Graph, g2: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> PackingResult:
    """Realization containing a ``k``-factor on its positive part, packed with ``g2``.

    Removes a ``k``-factor from a suitable realization, packs the remainder
    with ``g2``, then places a ``k``-regular graph on the remainder's
    positive vertices (padded with isolated ones) avoiding everything so far.
    """
    same_order(g1, g2)
    t0 = time.monotonic()
    hyp = check_theorem7_hypothesis(g1, g2, k, budget)
    if not hyp.holds:
        failed = [c for c, ok in hyp.clauses.items() if not ok]
        raise HypothesisUnmet("failed clauses: " + ", ".join(failed))
    found = positive_part_has_k_factor_realization(g1, k, budget)
    w_real, fac = found
    h1 = w_real.with_edges(remove=fac.edges())
    m = w_real.n
    n = g1.n
    routes = ["cor4"]
    try:
        h2 = _pack_terms_on(degree_sequence(h1).terms, g2, list(range(n)), budget)
        if h2 is None:
            exact = pack_sequence(g1, g2, budget)
            return _result(exact.status, Mode.SEQUENCE, exact.witness, routes + ["exact"], t0, anomaly=exact.packed)
        z = h2.union(g2)
        xs = positive_vertices(h2)
        pad = [v for v in _zero_vertices(h2)][: m - len(xs)]
        xs = sorted(xs + pad)
        placed, route, anomaly = _regular_into(k, m, z, xs, budget, max_degree(z))
        routes.append(route)
    except _Budgeted:
        return _result(Status.BUDGET_EXHAUSTED, Mode.SEQUENCE, None, routes, t0)
    if placed is None:
        exact = pack_sequence(g1, g2, budget)
        return _result(exact.status, Mode.SEQUENCE, exact.witness, routes + ["exact"], t0, anomaly=exact.packed)
    return _result(Status.PACKED, Mode.SEQUENCE, h2.union(placed), routes, t0, anomaly=anomaly, k_factor=_lift_edges(placed))


def _lift_edges(g: Graph) -> list[list[int]]:
    return [list(e) for e in g.edges()]


# ---------------------------------------------------------------------------
# matchings and split graphs
# ---------------------------------------------------------------------------


def _matching_part(g1: Graph) -> tuple[list[int], list[int]]:
    m = [v for c in components(g1) if max_degree(g1.induced(c)) <= 1 for v in c]
    ms = set(m)
    return [v for v in range(g1.n) if v not in ms], sorted(m)


def _large_matching(g1: Graph, g2: Graph, fv: list[int], mv: list[int], budget: SearchBudget) -> Graph | None:
    n = g1.n
    hf = _pack_terms_on(degree_sequence(g1.induced(fv)).terms, g2, list(range(n)), budget) if fv else Graph(n)
    if hf is None:
        return None
    rest = _zero_vertices(hf)
    hm = _pack_terms_on(degree_sequence(g1.induced(mv)).terms, g2, rest, budget)
    if hm is None:
        return None
    return hf.union(hm)


def pipeline_large_matching(g1: Graph, g2: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> PackingResult:
    """``g1`` = F plus a part of maximum degree at most one with many vertices."""
    same_order(g1, g2)
    t0 = time.monotonic()
    fv, mv = _matching_part(g1)
    d2 = max_degree(g2)
    if not check_bec(g1, g2).holds:
        raise HypothesisUnmet("product bound fails")
    if len(mv) < 2 * d2 + 1:
        raise HypothesisUnmet(f"matching part has {len(mv)} vertices, needs at least {2 * d2 + 1}")
    try:
        w = _large_matching(g1, g2, fv, mv, budget)
    except _Budgeted:
        return _result(Status.BUDGET_EXHAUSTED, Mode.SEQUENCE, None, ["large-matching"], t0)
    if w is not None:
        return _result(Status.PACKED, Mode.SEQUENCE, w, ["large-matching"], t0)
    exact = pack_sequence(g1, g2, budget)
    return _result(exact.status, Mode.SEQUENCE, exact.witness, ["large-matching", "exact"], t0, anomaly=exact.packed)


def pipeline_split(g1: Graph, g2: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> PackingResult:
    """``g1`` = split graph plus a part of maximum degree at most one."""
    same_order(g1, g2)
    t0 = time.monotonic()
    fv, mv = _matching_part(g1)
    if fv and is_split(g1.induced(fv)) is None:
        raise DecompositionNotFound("the part of maximum degree above one is not split")
    if not check_bec(g1, g2).holds:
        raise HypothesisUnmet("product bound fails")
    d1, d2 = max_degree(g1), max_degree(g2)
    m_edges = g1.induced(mv).num_edges if mv else 0
    routes: list[str] = []
    try:
        if m_edges == 0 or d2 <= 1:
            routes.append("cor4" if m_edges == 0 else "thm3")
            w = _pack_terms_on(degree_sequence(g1).terms, g2, list(range(g1.n)), budget)
        elif len(mv) >= 2 * d2 + 1:
            routes.append("large-matching")
            w = _large_matching(g1, g2, fv, mv, budget)
        elif len(mv) <= min(d1, d2) + d2 - 1:
            routes.append("matching-first")
            hm = _pack_terms_on(degree_sequence(g1.induced(mv)).terms, g2, list(range(g1.n)), budget)
            w = None
            if hm is not None:
                rest = _zero_vertices(hm)
                hf = _pack_terms_on(degree_sequence(g1.induced(fv)).terms, g2, rest, budget)
                w = hm.union(hf) if hf is not None else None
        else:
            w = None
    except _Budgeted:
        return _result(Status.BUDGET_EXHAUSTED, Mode.SEQUENCE, None, routes, t0)
    if w is not None:
        return _result(Status.PACKED, Mode.SEQUENCE, w, routes, t0)
    routes.append("exact")
    exact = pack_sequence(g1, g2, budget)
    return _result(exact.status, Mode.SEQUENCE, exact.witness, routes, t0, anomaly=exact.packed)
