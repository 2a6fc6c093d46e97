"""Hypothesis checkers: exact integer evaluation of each theorem's conditions."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .degseq import DegreeSequence, degree_sequence, realizations_up_to_isomorphism
from .errors import BadParameter, Infeasible, NotRegular
from .factors import find_f_factor, has_f_factor
from .graph import Graph, delta_plus, is_forest, is_regular, max_degree, min_degree, positive_part
from .packing import DEFAULT_BUDGET, SearchBudget, same_order
from .recognizers import match_exceptions


@dataclass
class HypothesisReport:
    """Named boolean clauses plus the quantities they were computed from."""

    theorem: str
    holds: bool
    clauses: dict[str, bool] = field(default_factory=dict)
    quantities: dict[str, int | None] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "holds": self.holds,
            "clauses": dict(self.clauses),
            "quantities": dict(self.quantities),
            "notes": list(self.notes),
        }


def _base(g1: Graph, g2: Graph) -> dict[str, int | None]:
    same_order(g1, g2)
    return {"n": g1.n, "delta1": max_degree(g1), "delta2": max_degree(g2)}


def g_value(g1: Graph, g2: Graph) -> int:
    """Slack term: 0 when the largest degree of ``g1`` equals its smallest positive one."""
    return 0 if max_degree(g1) == delta_plus(g1) else max_degree(g2) - 1


def check_bec(g1: Graph, g2: Graph) -> HypothesisReport:
    q = _base(g1, g2)
    lhs = (q["delta1"] + 1) * (q["delta2"] + 1)
    rhs = q["n"] + 1
    q.update(lhs=lhs, rhs=rhs)
    ok = lhs <= rhs
    return HypothesisReport("bec", ok, {"product_bound": ok}, q)


def check_main(g1: Graph, g2: Graph) -> HypothesisReport:
    q = _base(g1, g2)
    d1, d2, n = q["delta1"], q["delta2"], q["n"]
    q["min_delta"] = min(d1, d2)
    lhs = (d1 + 1) * (d2 + 1)
    q["lhs"] = lhs
    if g1.num_edges == 0:
        q.update(delta_plus=None, g=None, rhs=None)
        rep = HypothesisReport("main", True, {"product_bound": True}, q)
        rep.notes.append("g1 has no edges; the statement holds trivially")
        return rep
    q["delta_plus"] = delta_plus(g1)
    q["g"] = g_value(g1, g2)
    rhs = n + 1 + min(d1, d2) + q["g"]
    q["rhs"] = rhs
    ok = lhs <= rhs
    return HypothesisReport("main", ok, {"product_bound": ok}, q)


def check_cor4(g1: Graph, g2: Graph) -> HypothesisReport:
    q = _base(g1, g2)
    d1, d2, n = q["delta1"], q["delta2"], q["n"]
    lhs = (d1 + 1) * (d2 + 1)
    q["lhs"] = lhs
    first = lhs <= n + min(d1, d2)
    regular = g1.num_edges == 0 or is_regular(positive_part(g1))
    second_available = not regular
    second = second_available and lhs <= n + min(d1 + d2, 2 * d2)
    q.update(rhs_first=n + min(d1, d2), rhs_second=n + min(d1 + d2, 2 * d2))
    clauses = {
        "first_bound": first,
        "positive_part_regular": regular,
        "second_bound": second,
    }
    rep = HypothesisReport("cor4", first or second, clauses, q)
    if first:
        rep.notes.append("first clause applies")
    elif second:
        rep.notes.append("second clause applies (positive part not regular)")
    return rep


def check_katerinis(g1: Graph, g2: Graph) -> HypothesisReport:
    """Three conditions, the two rational ones cross-multiplied by ``delta(g1)``."""
    q = _base(g1, g2)
    d1, d2, n = q["delta1"], q["delta2"], q["n"]
    m1 = min_degree(g1)
    q["min_delta1"] = m1
    positive = m1 >= 1
    if positive:
        second = n * m1 >= (m1 + d1) * (d2 + 1)
        third = n * m1 > (m1 + d1) * (m1 + d1 - 3)
    else:
        second = third = False
    clauses = {"min_degree_positive": positive, "order_vs_delta2": second, "order_vs_delta1": third}
    return HypothesisReport("katerinis", positive and second and third, clauses, q)


def katerinis_assignment_packs(g1: Graph, g2: Graph, phi: list[int], budget: SearchBudget = DEFAULT_BUDGET) -> bool:
    """Whether vertex ``i`` can get degree ``d[phi[i]]`` in a realization avoiding ``g2``."""
    d = degree_sequence(g1).terms
    f = [d[phi[i]] for i in range(g1.n)]
    return has_f_factor(g2.complement(), f, budget)


def sample_phis(n: int, count: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    out = [list(range(n))]
    for _ in range(count):
        p = list(range(n))
        rng.shuffle(p)
        out.append(p)
    return out


def check_theorem5_hypothesis(g1: Graph, g2: Graph) -> HypothesisReport:
    q = _base(g1, g2)
    if g1.num_edges == 0:
        raise NotRegular("g1 has no edges, so it has no regular positive part")
    pp = positive_part(g1)
    if not is_regular(pp):
        raise NotRegular("positive part of g1 is not regular")
    k = max_degree(pp)
    size = pp.n
    d2 = q["delta2"]
    q.update(k=k, positive_order=size, bound=2 * d2 + 2 * (k - 1))
    ok = size >= 2 * d2 + 2 * (k - 1)
    exception_possible = size == 2 * d2
    rep = HypothesisReport("thm5", ok, {"order_bound": ok, "exception_clause_active": exception_possible}, q)
    if exception_possible:
        rep.notes.append("the matching-type exceptions apply when |positive part| = 2*delta2")
    return rep


def positive_part_has_k_factor_realization(g1: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET):
    """A realization of the positive sequence that contains a ``k``-factor, or None.

    Searches realizations of the sequence lowered by ``k`` and asks for a
    ``k``-factor in each complement.  Returns ``(realization, factor)``.
    """
    pp = positive_part(g1)
    terms = degree_sequence(pp).terms
    if any(d < k for d in terms):
        return None
    lowered = DegreeSequence(d - k for d in terms)
    for h in realizations_up_to_isomorphism(lowered):
        try:
            fac = find_f_factor(h.complement(), [k] * h.n, budget)
        except Infeasible:
            continue
        return h.union(fac), fac
    return None


def check_theorem7_hypothesis(g1: Graph, g2: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> HypothesisReport:
    if k < 1:
        raise BadParameter("k must be at least 1")
    q = _base(g1, g2)
    d1, d2, n = q["delta1"], q["delta2"], q["n"]
    q["k"] = k
    if g1.num_edges == 0:
        rep = HypothesisReport("thm7", False, {"positive_order_bound": False, "product_bound": False, "k_factor_realization": False}, q)
        rep.notes.append("g1 has no edges")
        return rep
    size = positive_part(g1).n
    q["positive_order"] = size
    order_ok = size >= 2 * (d1 + d2) - 1
    lhs = (d1 + 1) * (d2 + 1)
    rhs = n + min(d1 + k * d2, k + (k + 1) * d2)
    q.update(lhs=lhs, rhs=rhs)
    prod_ok = lhs <= rhs
    factor_ok = positive_part_has_k_factor_realization(g1, k, budget) is not None
    clauses = {"positive_order_bound": order_ok, "product_bound": prod_ok, "k_factor_realization": factor_ok}
    return HypothesisReport("thm7", order_ok and prod_ok and factor_ok, clauses, q)


def check_forest_embed(f: Graph, g: Graph) -> HypothesisReport:
    q = {"forest_order": f.n, "forest_edges": f.num_edges, "host_order": g.n, "host_min_degree": min_degree(g)}
    clauses = {
        "is_forest": is_forest(f),
        "order": g.n >= f.n,
        "min_degree": min_degree(g) >= f.num_edges,
    }
    return HypothesisReport("forest-embed", all(clauses.values()), clauses, q)


def exceptions_report(g1: Graph, g2: Graph) -> list[dict]:
    return [k.as_dict() for k in sorted(match_exceptions(g1, g2))]
