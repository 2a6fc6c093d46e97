"""Reference search kernels on bitmask graphs.

Every kernel takes ``n`` and a list of ``n`` adjacency bitmasks (bit ``w`` of
``adj[v]`` set iff ``vw`` is an edge).  The compiled module ``_ckernels``
implements the same functions with the same traversal order, so both
backends return identical results and identical node counts.

Search kernels return ``(status, payload, nodes)`` where ``status`` is one of
``FOUND``, ``EXHAUSTED`` (the search space was covered without success) or
``BUDGET`` (node or wall-clock limit reached first).
"""

from __future__ import annotations

import time

FOUND = 0
EXHAUSTED = 1
BUDGET = 2

_CLOCK_EVERY = 1024
_MAX_AUTOS = 64


class _OutOfBudget(Exception):
    pass


class _Meter:
    __slots__ = ("nodes", "limit", "deadline")

    def __init__(self, limit: int, deadline: float) -> None:
        self.nodes = 0
        self.limit = limit
        self.deadline = deadline

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise _OutOfBudget
        if self.deadline and not (self.nodes & (_CLOCK_EVERY - 1)):
            if time.monotonic() > self.deadline:
                raise _OutOfBudget


def _low_index(bit: int) -> int:
    return bit.bit_length() - 1


def erdos_gallai(seq: list[int]) -> bool:
    """Return True iff ``seq`` (any order, non-negative) is graphical."""
    d = sorted(seq, reverse=True)
    if sum(d) % 2:
        return False
    n = len(d)
    left = 0
    for k in range(1, n + 1):
        left += d[k - 1]
        right = k * (k - 1)
        for i in range(k, n):
            right += d[i] if d[i] < k else k
        if left > right:
            return False
    return True


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------


class _Canon:
    def __init__(self, n: int, adj: list[int]) -> None:
        self.n = n
        self.adj = adj
        self.autos: list[list[int]] = []
        self.best_rows: list[int] | None = None
        self.best_order: list[int] | None = None
        self.nodes = 0

    def refine(self, cells: list[list[int]]) -> list[list[int]]:
        adj = self.adj
        while True:
            masks = []
            for cell in cells:
                m = 0
                for v in cell:
                    m |= 1 << v
                masks.append(m)
            changed = False
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                sig = {v: [(adj[v] & m).bit_count() for m in masks] for v in cell}
                ordered = sorted(cell, key=lambda v: (sig[v], v))
                group = [ordered[0]]
                for v in ordered[1:]:
                    if sig[v] == sig[group[-1]]:
                        group.append(v)
                    else:
                        out.append(group)
                        group = [v]
                        changed = True
                out.append(group)
            cells = out
            if not changed:
                return cells

    def same_orbit(self, v: int, explored: list[int], prefix: list[int]) -> bool:
        gens = [g for g in self.autos if all(g[p] == p for p in prefix)]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in gens:
            for x in range(self.n):
                a, b = find(x), find(g[x])
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
        root = find(v)
        return any(find(e) == root for e in explored)

    def leaf(self, order: list[int]) -> None:
        n = self.n
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for i in range(n):
            a = self.adj[order[i]]
            r = 0
            while a:
                b = a & -a
                r |= 1 << pos[_low_index(b)]
                a ^= b
            rows.append(r)
        if self.best_rows is None or rows > self.best_rows:
            self.best_rows = rows
            self.best_order = order
        elif rows == self.best_rows:
            gamma = [0] * n
            for i in range(n):
                gamma[order[i]] = self.best_order[i]
            if len(self.autos) < _MAX_AUTOS and any(gamma[x] != x for x in range(n)):
                self.autos.append(gamma)

    def search(self, cells: list[list[int]], prefix: list[int]) -> None:
        self.nodes += 1
        t = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                t = i
                break
        if t < 0:
            self.leaf([cell[0] for cell in cells])
            return
        cell = cells[t]
        explored: list[int] = []
        for v in cell:
            if explored and self.same_orbit(v, explored, prefix):
                continue
            explored.append(v)
            rest = [w for w in cell if w != v]
            child = cells[:t] + [[v], rest] + cells[t + 1 :]
            self.search(self.refine(child), prefix + [v])


def canon(n: int, adj: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical adjacency rows and the vertex order that produces them.

    ``order[i]`` is the input vertex placed at canonical position ``i``;
    ``rows[i]`` is the neighbourhood of position ``i`` in canonical labels.
    Two inputs are isomorphic iff their ``rows`` are equal.
    """
    if n == 0:
        return (), ()
    state = _Canon(n, list(adj))
    state.search(state.refine([list(range(n))]), [])
    return tuple(state.best_rows), tuple(state.best_order)


# ---------------------------------------------------------------------------
# subgraph embedding
# ---------------------------------------------------------------------------


def _twins(adj: list[int], p: int, q: int) -> bool:
    return (adj[p] & ~(1 << q)) == (adj[q] & ~(1 << p))


def embed(n: int, pat: list[int], host: list[int], node_limit: int, deadline: float):
    """Injective map of pattern vertices into host vertices carrying edges to edges."""
    if n == 0:
        return FOUND, [], 0
    pdeg = [pat[v].bit_count() for v in range(n)]
    hdeg = [host[v].bit_count() for v in range(n)]
    ps = sorted(pdeg, reverse=True)
    hs = sorted(hdeg, reverse=True)
    if any(ps[i] > hs[i] for i in range(n)):
        return EXHAUSTED, None, 0

    order: list[int] = []
    placed = 0
    for _ in range(n):
        best = -1
        best_key = (-1, -1)
        for v in range(n):
            if placed >> v & 1:
                continue
            key = ((pat[v] & placed).bit_count(), pdeg[v])
            if key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best

    twin_prev = [-1] * n
    for i, p in enumerate(order):
        for j in range(i - 1, -1, -1):
            if _twins(pat, p, order[j]):
                twin_prev[p] = order[j]
                break
    ok_mask = [0] * n
    for p in range(n):
        m = 0
        for t in range(n):
            if hdeg[t] >= pdeg[p]:
                m |= 1 << t
        ok_mask[p] = m
    back = []
    seen = 0
    for p in order:
        back.append([q for q in order if (seen >> q & 1) and (pat[p] >> q & 1)])
        seen |= 1 << p

    image = [-1] * n
    meter = _Meter(node_limit, deadline)

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        meter.tick()
        p = order[i]
        cand = ok_mask[p] & ~used
        for q in back[i]:
            cand &= host[image[q]]
        tp = twin_prev[p]
        if tp >= 0:
            cand &= ~((2 << image[tp]) - 1)
        while cand:
            b = cand & -cand
            cand ^= b
            image[p] = _low_index(b)
            if rec(i + 1, used | b):
                return True
        image[p] = -1
        return False

    try:
        found = rec(0, 0)
    except _OutOfBudget:
        return BUDGET, None, meter.nodes
    if found:
        return FOUND, list(image), meter.nodes
    return EXHAUSTED, None, meter.nodes


# ---------------------------------------------------------------------------
# f-factors and degree-sequence packing
# ---------------------------------------------------------------------------


class _Factor:
    def __init__(self, n: int, host: list[int], f: list[int], meter: _Meter) -> None:
        self.n = n
        order = sorted(range(n), key=lambda v: (-f[v], v))
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        hr = [0] * n
        for i, v in enumerate(order):
            a = host[v]
            m = 0
            while a:
                b = a & -a
                m |= 1 << pos[_low_index(b)]
                a ^= b
            hr[i] = m
        self.order = order
        self.h = hr
        self.res = [f[v] for v in order]
        self.e = [0] * n
        self.live = 0
        for i in range(n):
            if self.res[i]:
                self.live |= 1 << i
        self.meter = meter

    def feasible(self, j: int) -> bool:
        res = self.res
        live = self.live & ~((1 << j) - 1)
        seq = []
        for k in range(j, self.n):
            r = res[k]
            if r:
                if (self.h[k] & live).bit_count() < r:
                    return False
                seq.append(r)
        return erdos_gallai(seq)

    def place(self, i: int) -> bool:
        n = self.n
        while i < n and self.res[i] == 0:
            i += 1
        if i == n:
            return True
        cand = self.h[i] & self.live & ~((2 << i) - 1)
        if cand.bit_count() < self.res[i]:
            return False
        return self.pick(i, cand)

    def pick(self, i: int, cand: int) -> bool:
        res = self.res
        if res[i] == 0:
            return self.feasible(i + 1) and self.place(i + 1)
        self.meter.tick()
        while cand:
            if cand.bit_count() < res[i]:
                return False
            b = cand & -cand
            cand ^= b
            w = _low_index(b)
            res[i] -= 1
            res[w] -= 1
            self.e[i] |= b
            self.e[w] |= 1 << i
            if res[w] == 0:
                self.live &= ~b
            if self.pick(i, cand):
                return True
            res[i] += 1
            res[w] += 1
            self.e[i] &= ~b
            self.e[w] &= ~(1 << i)
            self.live |= b
        return False

    def solution(self) -> list[int]:
        out = [0] * self.n
        order = self.order
        for i in range(self.n):
            a = self.e[i]
            while a:
                b = a & -a
                out[order[i]] |= 1 << order[_low_index(b)]
                a ^= b
        return out


def _factor_prechecks(n: int, host: list[int], f: list[int]) -> bool:
    total = 0
    for v in range(n):
        if f[v] < 0 or f[v] > host[v].bit_count():
            return False
        total += f[v]
    return total % 2 == 0


def _run_factor(n: int, host: list[int], f: list[int], meter: _Meter):
    if not _factor_prechecks(n, host, f):
        return None
    state = _Factor(n, host, f, meter)
    if state.feasible(0) and state.place(0):
        return state.solution()
    return None


def ffactor(n: int, host: list[int], f: list[int], node_limit: int, deadline: float):
    """Spanning subgraph of ``host`` in which vertex ``v`` has degree ``f[v]``."""
    meter = _Meter(node_limit, deadline)
    try:
        sol = _run_factor(n, host, list(f), meter)
    except _OutOfBudget:
        return BUDGET, None, meter.nodes
    if sol is None:
        return EXHAUSTED, None, meter.nodes
    return FOUND, sol, meter.nodes


def seqpack(
    n: int,
    host: list[int],
    counts: list[int],
    fixed: list[int],
    node_limit: int,
    deadline: float,
):
    """Subgraph of ``host`` whose degree multiset is given by ``counts``.

    ``counts[d]`` is the number of vertices that must receive degree ``d``.
    ``fixed[v] >= 0`` pins the degree of ``v`` (drawn from the same multiset);
    ``-1`` leaves it free.  Degrees are assigned by backtracking (host twins
    take non-increasing values) and each full assignment is handed to the
    f-factor search.
    """
    counts = list(counts)
    if sum(counts) != n:
        return EXHAUSTED, None, 0
    hdeg = [host[v].bit_count() for v in range(n)]
    f = [-1] * n
    for v in range(n):
        d = fixed[v]
        if d >= 0:
            if d >= len(counts) or counts[d] == 0 or d > hdeg[v]:
                return EXHAUSTED, None, 0
            counts[d] -= 1
            f[v] = d
    free = sorted((v for v in range(n) if fixed[v] < 0), key=lambda v: (-hdeg[v], v))
    values = []
    for d in range(len(counts) - 1, -1, -1):
        values.extend([d] * counts[d])
    for k, v in enumerate(free):
        if values[k] > hdeg[v]:
            return EXHAUSTED, None, 0
    twin_prev = {}
    for k, v in enumerate(free):
        twin_prev[v] = -1
        for j in range(k - 1, -1, -1):
            if _twins(host, free[j], v):
                twin_prev[v] = free[j]
                break
    distinct = [d for d in range(len(counts) - 1, -1, -1) if counts[d]]
    meter = _Meter(node_limit, deadline)
    found: list[list[int]] = []

    def rec(k: int) -> bool:
        if k == len(free):
            sol = _run_factor(n, host, f, meter)
            if sol is None:
                return False
            found.append(sol)
            return True
        meter.tick()
        v = free[k]
        cap = hdeg[v]
        tp = twin_prev[v]
        if tp >= 0 and f[tp] < cap:
            cap = f[tp]
        for d in distinct:
            if d > cap or counts[d] == 0:
                continue
            counts[d] -= 1
            f[v] = d
            if rec(k + 1):
                return True
            counts[d] += 1
        f[v] = -1
        return False

    try:
        ok = rec(0)
    except _OutOfBudget:
        return BUDGET, None, meter.nodes
    if ok:
        return FOUND, found[0], meter.nodes
    return EXHAUSTED, None, meter.nodes
