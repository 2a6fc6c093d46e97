"""Exhaustive verification of packing statements over small graph pairs.

Pairs are drawn from isomorphism-class representatives.  Work is split into
rows (one first graph per row) and merged in row order, so the report does
not depend on the number of workers.
"""

from __future__ import annotations

import functools
import itertools
import multiprocessing
from collections.abc import Callable
from dataclasses import dataclass, field

from .canon import canonical_key, enumerate_graphs, max_order
from .errors import BadParameter, BudgetExhausted, NoEmbedding, NotRegular, OrderTooLarge
from .factors import forest_embed
from .graph import Graph, components, is_forest, is_regular, max_degree, min_degree, positive_part
from .graph6 import encode
from .hypotheses import check_bec, check_cor4, check_katerinis, check_main, check_theorem5_hypothesis, katerinis_assignment_packs, sample_phis
from .packing import DEFAULT_BUDGET, Mode, SearchBudget, Status, pack_component_wise, pack_degrees, pack_embed, pack_sequence, validate_witness
from .pipelines import theorem12_split
from .recognizers import match_exceptions

SCHEMA = "packlab/1"

# outcome labels of a single instance
SKIP = "skip"
PACKED = "packed"
EXCLUDED = "excluded"
EXHAUSTED = "exhausted"
COUNTEREXAMPLE = "counterexample"


@dataclass
class VerificationReport:
    theorem: str
    min_order: int
    max_order: int
    instances: int = 0
    hypothesis_satisfied: int = 0
    packed: int = 0
    excluded: int = 0
    budget_exhausted: int = 0
    counterexamples: list[list[str]] = field(default_factory=list)
    exhausted_instances: list[list[str]] = field(default_factory=list)
    notes: dict[str, int] = field(default_factory=dict)

    def is_consistent(self) -> bool:
        return self.hypothesis_satisfied == self.packed + self.excluded + self.budget_exhausted + len(self.counterexamples)

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "verification-report",
            "theorem": self.theorem,
            "orders": [self.min_order, self.max_order],
            "counts": {
                "instances": self.instances,
                "hypothesis_satisfied": self.hypothesis_satisfied,
                "packed": self.packed,
                "excluded_by_exception": self.excluded,
                "budget_exhausted": self.budget_exhausted,
                "counterexamples": len(self.counterexamples),
            },
            "counterexamples": [list(p) for p in self.counterexamples],
            "exhausted_instances": [list(p) for p in self.exhausted_instances],
            "notes": dict(sorted(self.notes.items())),
        }


@dataclass(frozen=True)
class _Outcome:
    label: str
    notes: tuple[str, ...] = ()


def _status_outcome(status: Status, problems: list[str] | None = None) -> _Outcome:
    if status is Status.BUDGET_EXHAUSTED:
        return _Outcome(EXHAUSTED)
    if status is Status.PACKED:
        if problems:
            return _Outcome(COUNTEREXAMPLE, ("invalid_witness",))
        return _Outcome(PACKED)
    return _Outcome(COUNTEREXAMPLE)


def _solve(fn, mode_g1: Graph, g2: Graph, budget: SearchBudget) -> _Outcome:
    res = fn(mode_g1, g2, budget)
    problems = validate_witness(res, mode_g1, g2) if res.packed else None
    return _status_outcome(res.status, problems)


# ---------------------------------------------------------------------------
# per-statement instance checks: (g1, g2, budget, seed) -> _Outcome
# ---------------------------------------------------------------------------


def _bec_half(g1: Graph, g2: Graph, budget: SearchBudget, seed: int) -> _Outcome:
    if not check_main(g1, g2).holds:
        return _Outcome(SKIP)
    if match_exceptions(g1, g2):
        res = pack_sequence(g1, g2, budget)
        if res.status is Status.UNPACKABLE:
            return _Outcome(EXCLUDED, ("excluded_confirmed_unpackable",))
        if res.status is Status.BUDGET_EXHAUSTED:
            return _Outcome(EXCLUDED, ("excluded_unconfirmed",))
        return _Outcome(EXCLUDED, ("excluded_but_packed",))
    return _solve(pack_sequence, g1, g2, budget)


def _cor4(g1: Graph, g2: Graph, budget: SearchBudget, seed: int) -> _Outcome:
    if not check_cor4(g1, g2).holds:
        return _Outcome(SKIP)
    return _solve(pack_sequence, g1, g2, budget)


def _problem1(g1: Graph, g2: Graph, budget: SearchBudget, seed: int) -> _Outcome:
    if not check_bec(g1, g2).holds:
        return _Outcome(SKIP)
    return _solve(pack_component_wise, g1, g2, budget)


def _thm5(g1: Graph, g2: Graph, budget: SearchBudget, seed: int) -> _Outcome:
    if g1.num_edges == 0 or not is_regular(positive_part(g1)):
        return _Outcome(SKIP)
    if not check_theorem5_hypothesis(g1, g2).holds:
        return _Outcome(SKIP)
    pp = positive_part(g1)
    k, m = max_degree(pp), pp.n
    d2 = max_degree(g2)
    labels = []
    seen: set[bytes] = set()
    for xs in itertools.combinations(range(g2.n), m):
        z = g2.induced(xs)
        key = canonical_key(z)
        if key in seen:
            continue
        seen.add(key)
        if m == 2 * d2 and {e.tag for e in match_exceptions(pp, z)} & {"F3", "F4"}:
            labels.append(EXCLUDED)
            continue
        res = pack_degrees([k] * m, z, budget)
        if res.packed and (res.witness.degrees() != [k] * m or any(res.witness.has_edge(u, v) for u, v in z.edges())):
            labels.append(COUNTEREXAMPLE)
        else:
            labels.append(_status_outcome(res.status).label)
    for label in (COUNTEREXAMPLE, EXHAUSTED, EXCLUDED):
        if label in labels:
            return _Outcome(label)
    return _Outcome(PACKED)


def _lemma9(g1: Graph, g2: Graph, budget: SearchBudget, seed: int) -> _Outcome:
    trees = [c for c in components(g1) if is_forest(g1.induced(c))]
    if len(trees) < max_degree(g2) + 1:
        return _Outcome(SKIP)
    fv = {v for c in trees for v in c}
    core = g1.induced([v for v in range(g1.n) if v not in fv]).padded(g1.n)
    core_res = pack_component_wise(core, g2, budget)
    if core_res.status is Status.BUDGET_EXHAUSTED:
        return _Outcome(SKIP, ("core_budget_exhausted",))
    if not core_res.packed:
        return _Outcome(SKIP)
    return _solve(pack_component_wise, g1, g2, budget)


def _thm12(g1: Graph, g2: Graph, budget: SearchBudget, seed: int) -> _Outcome:
    if not check_bec(g1, g2).holds:
        return _Outcome(SKIP)
    if theorem12_split(g1, g2) is None:
        return _Outcome(SKIP)
    return _solve(pack_embed, g1, g2, budget)


def _thm1(g1: Graph, g2: Graph, budget: SearchBudget, seed: int) -> _Outcome:
    if not check_katerinis(g1, g2).holds:
        return _Outcome(SKIP)
    for phi in sample_phis(g1.n, 20, seed):
        try:
            if not katerinis_assignment_packs(g1, g2, phi, budget):
                return _Outcome(COUNTEREXAMPLE)
        except BudgetExhausted:
            return _Outcome(EXHAUSTED)
    return _Outcome(PACKED)


_PAIR_CHECKS: dict[str, Callable[[Graph, Graph, SearchBudget, int], _Outcome]] = {
    "bec-half": _bec_half,
    "cor4": _cor4,
    "thm1": _thm1,
    "thm5": _thm5,
    "lemma9": _lemma9,
    "thm12": _thm12,
    "problem1": _problem1,
}

THEOREMS = tuple(sorted(list(_PAIR_CHECKS) + ["forest-embed"]))


def _forest_embed_row(g: Graph, budget: SearchBudget) -> list[tuple[Graph, Graph, _Outcome]]:
    """All forests ``f`` with ``|f| <= |g|`` against host ``g``."""
    out = []
    delta = min_degree(g) if g.n else 0
    for order in range(0, g.n + 1):
        for f in enumerate_graphs(order):
            if not is_forest(f):
                continue
            if f.num_edges > delta:
                out.append((f, g, _Outcome(SKIP)))
                continue
            try:
                image = forest_embed(f, g, budget.nodes)
            except NoEmbedding:
                out.append((f, g, _Outcome(COUNTEREXAMPLE)))
                continue
            except BudgetExhausted:
                out.append((f, g, _Outcome(EXHAUSTED)))
                continue
            ok = len(set(image)) == f.n and all(g.has_edge(image[u], image[v]) for u, v in f.edges())
            out.append((f, g, _Outcome(PACKED if ok else COUNTEREXAMPLE)))
    return out


def _row(task: tuple[str, int, int, SearchBudget, int]) -> list[tuple[str, str, str, tuple[str, ...]]]:
    theorem, n, i, budget, seed = task
    graphs = enumerate_graphs(n)
    if theorem == "forest-embed":
        triples = _forest_embed_row(graphs[i], budget)
    else:
        check = _PAIR_CHECKS[theorem]
        g1 = graphs[i]
        triples = [(g1, g2, check(g1, g2, budget, seed)) for g2 in graphs]
    return [(encode(a), encode(b), o.label, o.notes) for a, b, o in triples]


def verify_theorem(
    theorem: str,
    max_order: int,
    min_order: int = 1,
    budget: SearchBudget = DEFAULT_BUDGET,
    workers: int = 1,
    seed: int = 0,
) -> VerificationReport:
    """Check ``theorem`` on every ordered pair of class representatives.

    For ``forest-embed`` the pairs are (forest, host) with the forest no
    larger than the host, and ``min_order``/``max_order`` bound the host.
    """
    if theorem not in THEOREMS:
        raise BadParameter(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if workers < 1:
        raise BadParameter("workers must be positive")
    if min_order < 0 or max_order < min_order:
        raise BadParameter("order range is empty")
    cap = _max_order_cap()
    if max_order > cap:
        raise OrderTooLarge(f"max order {max_order} exceeds the enumeration cap {cap}")
    tasks = [(theorem, n, i, budget, seed) for n in range(min_order, max_order + 1) for i in range(len(enumerate_graphs(n)))]
    if workers == 1 or len(tasks) < 2:
        rows = map(_row, tasks)
        return _merge(theorem, min_order, max_order, rows)
    ctx = multiprocessing.get_context("fork") if "fork" in multiprocessing.get_all_start_methods() else None
    pool_factory = ctx.Pool if ctx is not None else multiprocessing.Pool
    with pool_factory(workers) as pool:
        return _merge(theorem, min_order, max_order, pool.imap(_row, tasks, chunksize=4))


def _max_order_cap() -> int:
    return max_order()


def _merge(theorem: str, lo: int, hi: int, rows) -> VerificationReport:
    rep = VerificationReport(theorem, lo, hi)
    for row in rows:
        for a, b, label, notes in row:
            rep.instances += 1
            for note in notes:
                rep.notes[note] = rep.notes.get(note, 0) + 1
            if label == SKIP:
                continue
            rep.hypothesis_satisfied += 1
            if label == PACKED:
                rep.packed += 1
            elif label == EXCLUDED:
                rep.excluded += 1
            elif label == EXHAUSTED:
                rep.budget_exhausted += 1
                rep.exhausted_instances.append([a, b])
            else:
                rep.counterexamples.append([a, b])
    return rep


@functools.lru_cache(maxsize=None)
def census(n: int) -> dict:
    """Class counts of ``n``-vertex graphs by a few structural properties."""
    from .recognizers import has_dominating_clique, is_split, is_unigraph

    graphs = enumerate_graphs(n)
    counts = {"graphs": len(graphs), "connected": 0, "forests": 0, "regular": 0, "split": 0, "dominating_clique": 0}
    if n <= 8:
        counts["unigraphs"] = 0
    for g in graphs:
        counts["connected"] += len(components(g)) <= 1
        counts["forests"] += is_forest(g)
        counts["regular"] += is_regular(g)
        counts["split"] += is_split(g) is not None
        counts["dominating_clique"] += has_dominating_clique(g) is not None
        if n <= 8:
            counts["unigraphs"] += is_unigraph(g)
    return counts
