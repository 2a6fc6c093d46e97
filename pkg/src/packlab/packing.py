"""Exact packing solvers for the three packing notions."""

from __future__ import annotations

import enum
import itertools
import time
from collections import defaultdict
from dataclasses import dataclass, field

from . import _kernels
from .canon import canonical_key, isomorphism
from .degseq import degree_sequence, realizations_up_to_isomorphism
from .errors import BadParameter, SizeMismatch
from .families import disjoint_union
from .graph import Graph, components
from .moves import bad_pair_count


class Status(str, enum.Enum):
    PACKED = "PACKED"
    UNPACKABLE = "UNPACKABLE"
    BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"


class Mode(str, enum.Enum):
    EMBED = "embed"
    SEQUENCE = "sequence"
    COMPONENT_WISE = "componentwise"


@dataclass(frozen=True)
class SearchBudget:
    nodes: int = 10**7
    seconds: float = 30.0

    def __post_init__(self) -> None:
        if self.nodes <= 0 or self.seconds <= 0:
            raise BadParameter("search budgets must be positive")

    def deadline(self) -> float:
        return time.monotonic() + self.seconds


DEFAULT_BUDGET = SearchBudget()


@dataclass
class PackingResult:
    status: Status
    mode: Mode
    witness: Graph | None = None
    mapping: list[int] | None = None
    stats: dict = field(default_factory=dict)

    @property
    def packed(self) -> bool:
        return self.status is Status.PACKED


_STATUS = {
    _kernels.FOUND: Status.PACKED,
    _kernels.EXHAUSTED: Status.UNPACKABLE,
    _kernels.BUDGET: Status.BUDGET_EXHAUSTED,
}


def same_order(g1: Graph, g2: Graph) -> None:
    if g1.n != g2.n:
        raise SizeMismatch(f"graphs have orders {g1.n} and {g2.n}")


def _stats(nodes: int, t0: float, **extra) -> dict:
    out = {"nodes": nodes, "seconds": time.monotonic() - t0}
    out.update(extra)
    return out


def pack_embed(g1: Graph, g2: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> PackingResult:
    """Place a copy of ``g1`` edge-disjointly from ``g2`` (subgraph of the complement)."""
    same_order(g1, g2)
    t0 = time.monotonic()
    host = g2.complement()
    status, image, nodes = _kernels.embed(g1.n, g1.adj, host.adj, budget.nodes, budget.deadline())
    res = PackingResult(_STATUS[status], Mode.EMBED, stats=_stats(nodes, t0))
    if status == _kernels.FOUND:
        res.mapping = list(image)
        res.witness = g1.relabel(image)
    return res


def pack_sequence(g1: Graph, g2: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> PackingResult:
    """Find some realization of the degree sequence of ``g1`` disjoint from ``g2``."""
    same_order(g1, g2)
    return pack_degrees(degree_sequence(g1).terms, g2, budget)


def pack_degrees(terms, g2: Graph, budget: SearchBudget = DEFAULT_BUDGET, fixed=None) -> PackingResult:
    """Realization of the multiset ``terms`` avoiding the edges of ``g2``.

    ``fixed[v] >= 0`` pins the degree of ``v``.
    """
    n = g2.n
    terms = list(terms)
    if len(terms) != n:
        raise SizeMismatch(f"sequence has {len(terms)} terms for {n} vertices")
    t0 = time.monotonic()
    counts = [0] * (max(terms + [0]) + 1)
    for d in terms:
        counts[d] += 1
    fx = [-1] * n if fixed is None else list(fixed)
    status, rows, nodes = _kernels.seqpack(n, g2.complement().adj, counts, fx, budget.nodes, budget.deadline())
    res = PackingResult(_STATUS[status], Mode.SEQUENCE, stats=_stats(nodes, t0))
    if status == _kernels.FOUND:
        res.witness = Graph(n, rows)
    return res


def _component_classes(g: Graph) -> list[tuple[Graph, int]]:
    """Nontrivial components grouped by degree sequence: (one member, multiplicity)."""
    groups: dict[tuple, list[Graph]] = defaultdict(list)
    for comp in components(g):
        if len(comp) < 2:
            continue
        c = g.induced(comp)
        groups[degree_sequence(c).terms].append(c)
    return [(members[0], len(members)) for _, members in sorted(groups.items())]


def pack_component_wise(g1: Graph, g2: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> PackingResult:
    """Realization whose components realize those of ``g1``, disjoint from ``g2``.

    Tries ``g1`` itself first, then every multiset choice of connected
    realizations per group of equal-sequence components.
    """
    same_order(g1, g2)
    t0 = time.monotonic()
    deadline = budget.deadline()
    host = g2.complement().adj
    nodes = 0
    saw_budget = False

    def attempt(pattern: Graph):
        nonlocal nodes, saw_budget
        left = budget.nodes - nodes
        if left <= 0 or time.monotonic() > deadline:
            saw_budget = True
            return None
        status, image, used = _kernels.embed(g1.n, pattern.adj, host, left, deadline)
        nodes += used
        if status == _kernels.BUDGET:
            saw_budget = True
        if status == _kernels.FOUND:
            return pattern.relabel(image)
        return None

    def finish(witness: Graph | None, combos: int) -> PackingResult:
        if witness is not None:
            status = Status.PACKED
        elif saw_budget:
            status = Status.BUDGET_EXHAUSTED
        else:
            status = Status.UNPACKABLE
        return PackingResult(status, Mode.COMPONENT_WISE, witness=witness, stats=_stats(nodes, t0, combinations=combos))

    w = attempt(g1)
    if w is not None:
        return finish(w, 1)

    classes = _component_classes(g1)
    own_key = canonical_key(g1)
    per_group = []
    for rep, mult in classes:
        reals = realizations_up_to_isomorphism(degree_sequence(rep), connected=True)
        per_group.append(list(itertools.combinations_with_replacement(reals, mult)))
    isolates = g1.n - sum(rep.n * mult for rep, mult in classes)
    combos = 1
    for choice in itertools.product(*per_group):
        pattern = Graph(0)
        for group in choice:
            for comp in group:
                pattern = disjoint_union(pattern, comp)
        pattern = pattern.padded(pattern.n + isolates)
        if canonical_key(pattern) == own_key:
            continue
        combos += 1
        w = attempt(pattern)
        if w is not None:
            return finish(w, combos)
        if saw_budget and (nodes >= budget.nodes or time.monotonic() > deadline):
            break
    return finish(None, combos)


# ---------------------------------------------------------------------------
# witness validation
# ---------------------------------------------------------------------------


def component_signature(g: Graph) -> list[tuple[int, ...]]:
    """Sorted list of the degree sequences of the components."""
    return sorted(degree_sequence(g.induced(c)).terms for c in components(g))


def validate_witness(result: PackingResult, g1: Graph, g2: Graph) -> list[str]:
    """Problems with a PACKED result's witness (empty list when valid)."""
    problems = []
    w = result.witness
    if w is None:
        return ["no witness"]
    if w.n != g2.n:
        return [f"witness has order {w.n}, expected {g2.n}"]
    if bad_pair_count(w, g2):
        problems.append("witness shares an edge with g2")
    if result.mode is Mode.EMBED:
        if result.mapping is not None:
            if g1.relabel(result.mapping) != w:
                problems.append("mapping does not carry g1 onto the witness")
        elif isomorphism(g1, w) is None:
            problems.append("witness is not isomorphic to g1")
    elif result.mode is Mode.SEQUENCE:
        if degree_sequence(w) != degree_sequence(g1):
            problems.append("witness degree sequence differs from g1")
    else:
        if degree_sequence(w) != degree_sequence(g1):
            problems.append("witness degree sequence differs from g1")
        if component_signature(w) != component_signature(g1):
            problems.append("witness components do not match g1 component sequences")
    return problems
