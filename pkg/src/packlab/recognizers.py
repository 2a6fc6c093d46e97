"""Recognition of the exceptional pairs and of special graph classes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .canon import canonical_key, is_isomorphic
from .degseq import labeled_realizations
from .errors import OrderTooLarge, SizeMismatch
from .families import (
    build_complete,
    build_complete_bipartite,
    build_cycle_edges,
    build_disjoint_copies,
    build_independent,
    disjoint_union,
)
from .graph import Graph, _bits, find_clique, max_degree

UNIGRAPH_MAX_ORDER = 8


@dataclass(frozen=True, order=True)
class ExceptionKind:
    """One matched exceptional family; ``params`` holds the matched degrees."""

    tag: str
    params: tuple[tuple[str, int], ...] = field(default=())

    def as_dict(self) -> dict:
        return {"tag": self.tag, "params": dict(self.params)}

    def __str__(self) -> str:
        if not self.params:
            return self.tag
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.tag}({inner})"


@dataclass(frozen=True)
class SplitWitness:
    clique: tuple[int, ...]
    independent: tuple[int, ...]


@dataclass(frozen=True)
class DominatingCliqueWitness:
    clique: tuple[int, ...]


def exception_tags(kinds) -> list[str]:
    return sorted({k.tag for k in kinds})


def _f1_pair() -> tuple[Graph, Graph]:
    return (
        disjoint_union(build_cycle_edges(5), build_complete(1)),
        build_disjoint_copies(2, build_complete(3)),
    )


def match_exceptions(g1: Graph, g2: Graph) -> frozenset[ExceptionKind]:
    """Every exceptional family the pair belongs to, up to isomorphism."""
    if g1.n != g2.n:
        raise SizeMismatch(f"graphs have orders {g1.n} and {g2.n}")
    n = g1.n
    d1, d2 = max_degree(g1), max_degree(g2)
    found: set[ExceptionKind] = set()

    if n == 6:
        f1a, f1b = _f1_pair()
        if is_isomorphic(g1, f1a) and is_isomorphic(g2, f1b):
            found.add(ExceptionKind("F1"))

    if 1 <= d2 <= d1 and n == d1 * (d2 + 1):
        fa = disjoint_union(build_complete(d1 + 1), build_independent(d1 * d2 - 1))
        fb = build_disjoint_copies(d1, build_complete(d2 + 1))
        if is_isomorphic(g1, fa) and is_isomorphic(g2, fb):
            found.add(ExceptionKind("F2", (("delta1", d1), ("delta2", d2))))

    if d2 >= 1 and n == 2 * d2:
        matching = build_disjoint_copies(d2, build_complete(2))
        if is_isomorphic(g1, matching):
            if d2 % 2 == 1 and is_isomorphic(g2, build_complete_bipartite(d2, d2)):
                found.add(ExceptionKind("F3", (("delta2", d2),)))
            if find_clique(g2, d2 + 1) is not None:
                found.add(ExceptionKind("F4", (("delta2", d2),)))
    return frozenset(found)


# ---------------------------------------------------------------------------
# split graphs and dominating cliques
# ---------------------------------------------------------------------------


def _maximal_cliques(g: Graph):
    # Bron–Kerbosch with pivoting, deterministic order
    def rec(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        pu = p | x
        pivot = max(_bits(pu), key=lambda w: ((g.adj[w] & p).bit_count(), -w))
        for v in _bits(p & ~g.adj[pivot]):
            b = 1 << v
            yield from rec(r | b, p & g.adj[v], x & g.adj[v])
            p &= ~b
            x |= b

    if g.n == 0:
        yield 0
        return
    yield from rec(0, (1 << g.n) - 1, 0)


def is_split(g: Graph) -> SplitWitness | None:
    """Clique/independent-set partition if one exists.

    Some maximal clique works whenever any partition does; the witness then
    moves clique vertices without neighbors in the independent side across,
    so stars report their center alone.
    """
    full = (1 << g.n) - 1
    for k in _maximal_cliques(g):
        rest = full & ~k
        if any(g.adj[v] & rest for v in _bits(rest)):
            continue
        if rest:
            for v in _bits(k):
                if not g.adj[v] & rest:
                    k &= ~(1 << v)
                    rest |= 1 << v
        return SplitWitness(tuple(_bits(k)), tuple(_bits(rest)))
    return None


def is_split_by_degrees(g: Graph) -> bool:
    """Degree-sequence test for splitness (used as a cross-check)."""
    d = sorted(g.degrees(), reverse=True)
    m = 0
    for i, di in enumerate(d):
        if di >= i:
            m = i + 1
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


def has_dominating_clique(g: Graph) -> DominatingCliqueWitness | None:
    """Smallest dominating clique (lexicographically first among equals)."""
    full = (1 << g.n) - 1
    if g.n == 0:
        return DominatingCliqueWitness(())
    for size in range(1, g.n + 1):
        any_clique = False
        for combo in itertools.combinations(range(g.n), size):
            mask = 0
            covered = 0
            ok = True
            for v in combo:
                if g.adj[v] & mask != mask:
                    ok = False
                    break
                mask |= 1 << v
                covered |= g.adj[v]
            if not ok:
                continue
            any_clique = True
            if (covered | mask) == full:
                return DominatingCliqueWitness(combo)
        if not any_clique:
            return None
    return None


# ---------------------------------------------------------------------------
# unigraphs
# ---------------------------------------------------------------------------


def _degree_profile(g: Graph) -> tuple:
    degs = g.degrees()
    return tuple(sorted((degs[v], tuple(sorted(degs[w] for w in g.neighbors(v)))) for v in range(g.n)))


def is_unigraph(g: Graph, max_order: int = UNIGRAPH_MAX_ORDER) -> bool:
    """True iff every realization of the degree sequence is isomorphic to ``g``.

    Enumerates labeled realizations with the same per-vertex degrees (every
    realization is isomorphic to one of these) and stops at the first
    non-isomorphic one.
    """
    if g.n > max_order:
        raise OrderTooLarge(f"order {g.n} exceeds the unigraph cap {max_order}")
    key = canonical_key(g)
    profile = _degree_profile(g)
    for h in labeled_realizations(g.degrees()):
        if _degree_profile(h) != profile or canonical_key(h) != key:
            return False
    return True
