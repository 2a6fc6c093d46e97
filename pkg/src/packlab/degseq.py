"""Degree sequences: graphicality, Havel–Hakimi realizations, enumeration."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from . import _kernels
from .errors import BadParameter, NoPositiveTerm, NotGraphical
from .graph import Graph


@dataclass(frozen=True, init=False)
class DegreeSequence:
    """Multiset of non-negative integers, stored non-increasing."""

    terms: tuple[int, ...]

    def __init__(self, terms: Iterable[int]) -> None:
        t = tuple(sorted((int(x) for x in terms), reverse=True))
        if t and t[-1] < 0:
            raise BadParameter("degree sequence terms must be non-negative")
        object.__setattr__(self, "terms", t)

    @classmethod
    def parse(cls, text: str) -> DegreeSequence:
        parts = [p for p in text.replace(" ", ",").split(",") if p]
        try:
            return cls(int(p) for p in parts)
        except ValueError:
            raise BadParameter(f"cannot parse degree sequence {text!r}") from None

    @property
    def n(self) -> int:
        return len(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def counts(self) -> list[int]:
        """``counts[d]`` is how many terms equal ``d``."""
        top = self.terms[0] if self.terms else 0
        out = [0] * (max(top, self.n - 1, 0) + 1)
        for d in self.terms:
            out[d] += 1
        return out

    def positive(self) -> DegreeSequence:
        return DegreeSequence(d for d in self.terms if d > 0)

    def min_positive(self) -> int:
        pos = [d for d in self.terms if d > 0]
        if not pos:
            raise NoPositiveTerm("sequence has no positive term")
        return pos[-1]

    def is_graphical(self) -> bool:
        return is_graphical(self)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.terms)) + ")"


def _as_seq(seq: DegreeSequence | Iterable[int]) -> DegreeSequence:
    return seq if isinstance(seq, DegreeSequence) else DegreeSequence(seq)


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(g.degrees())


def is_graphical(seq: DegreeSequence | Iterable[int]) -> bool:
    s = _as_seq(seq)
    if s.n and s.terms[0] > s.n - 1:
        return False
    return _kernels.erdos_gallai(list(s.terms))


def _lay_off(adj: list[int], res: list[int], v: int) -> None:
    # connect v to the res[v] other vertices of largest residual,
    # ties to the smallest index
    order = sorted((w for w in range(len(res)) if w != v and res[w] > 0), key=lambda w: (-res[w], w))
    d = res[v]
    if d > len(order):
        raise NotGraphical("residual degree exceeds available vertices")
    for w in order[:d]:
        adj[v] |= 1 << w
        adj[w] |= 1 << v
        res[w] -= 1
    res[v] = 0


def _havel_hakimi(res: list[int], adj: list[int]) -> None:
    while True:
        v = -1
        for w in range(len(res)):
            if res[w] > 0 and (v < 0 or res[w] > res[v]):
                v = w
        if v < 0:
            return
        _lay_off(adj, res, v)


def havel_hakimi_realize(seq: DegreeSequence | Iterable[int]) -> Graph:
    """Deterministic realization; vertex ``i`` receives the ``i``-th largest term."""
    s = _as_seq(seq)
    if not is_graphical(s):
        raise NotGraphical(f"{s} is not graphical")
    res = list(s.terms)
    adj = [0] * s.n
    _havel_hakimi(res, adj)
    return Graph(s.n, adj)


def realize_with_degrees(degrees: Sequence[int]) -> Graph:
    """Realization in which vertex ``v`` has degree ``degrees[v]``."""
    if not is_graphical(degrees):
        raise NotGraphical(f"{list(degrees)} is not graphical")
    res = list(degrees)
    adj = [0] * len(res)
    _havel_hakimi(res, adj)
    return Graph(len(res), adj)


def anchored_realize(seq: DegreeSequence | Iterable[int], anchor_degree: int) -> tuple[Graph, int]:
    """Realization ``F`` and anchor ``y`` whose neighbors are the highest-degree vertices.

    ``y`` is the last vertex carrying ``anchor_degree`` (the smallest positive
    term); it is laid off first against the largest other terms.
    """
    s = _as_seq(seq)
    if not is_graphical(s):
        raise NotGraphical(f"{s} is not graphical")
    if anchor_degree != s.min_positive():
        raise BadParameter(f"anchor degree {anchor_degree} is not the smallest positive term {s.min_positive()}")
    res = list(s.terms)
    y = max(v for v in range(s.n) if res[v] == anchor_degree)
    adj = [0] * s.n
    _lay_off(adj, res, y)
    _havel_hakimi(res, adj)
    return Graph(s.n, adj), y


def labeled_realizations(degrees: Sequence[int]) -> Iterator[Graph]:
    """Every graph in which vertex ``v`` has degree ``degrees[v]``.

    Deterministic order; residual Erdős–Gallai pruning after each vertex.
    """
    n = len(degrees)
    res = list(degrees)
    if any(d < 0 for d in res) or not is_graphical(res):
        return
    adj = [0] * n

    def rec(v: int) -> Iterator[Graph]:
        while v < n and res[v] == 0:
            v += 1
        if v == n:
            yield Graph(n, adj)
            return
        later = [w for w in range(v + 1, n) if res[w] > 0]
        d = res[v]
        if len(later) < d:
            return
        for combo in itertools.combinations(later, d):
            for w in combo:
                res[w] -= 1
                adj[v] |= 1 << w
                adj[w] |= 1 << v
            res[v] = 0
            if _kernels.erdos_gallai(res[v + 1 :]):
                yield from rec(v + 1)
            res[v] = d
            for w in combo:
                res[w] += 1
                adj[v] &= ~(1 << w)
                adj[w] &= ~(1 << v)

    yield from rec(0)


def realizations_up_to_isomorphism(seq: DegreeSequence | Iterable[int], connected: bool = False) -> list[Graph]:
    """One canonical graph per isomorphism class of realizations of ``seq``."""
    from .canon import canonical_form
    from .graph import is_connected

    s = _as_seq(seq)
    seen: dict[bytes, Graph] = {}
    for g in labeled_realizations(list(s.terms)):
        if connected and not is_connected(g):
            continue
        cf = canonical_form(g)
        if cf.key not in seen:
            seen[cf.key] = cf.canonical_graph()
    return [seen[k] for k in sorted(seen)]
