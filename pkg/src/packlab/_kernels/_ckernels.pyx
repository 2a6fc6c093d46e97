# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Same functions, arguments, traversal order and results as ``_pykernels``;
graphs are limited to 64 vertices (one ``uint64`` mask per row).
"""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy
from cpython.mem cimport PyMem_Malloc, PyMem_Free
from posix.time cimport clock_gettime, timespec, CLOCK_MONOTONIC

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

DEF MAXN = 64
DEF MAX_AUTOS = 64
DEF CLOCK_EVERY = 1024

FOUND = 0
EXHAUSTED = 1
BUDGET = 2


cdef inline int popc(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t bit(int i) noexcept nogil:
    return (<uint64_t>1) << i


cdef inline uint64_t below(int i) noexcept nogil:
    # mask of bits 0..i-1
    if i >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return bit(i) - 1


cdef struct Meter:
    long long nodes
    long long limit
    double deadline
    int out


cdef inline double now() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


cdef inline int tick(Meter* m) noexcept nogil:
    m.nodes += 1
    if m.nodes > m.limit:
        m.out = 1
        return 1
    if m.deadline > 0 and (m.nodes & (CLOCK_EVERY - 1)) == 0:
        if now() > m.deadline:
            m.out = 1
            return 1
    return 0


cdef int erdos_gallai_c(int* seq, int m) noexcept nogil:
    cdef int d[MAXN]
    cdef int i, j, k, x, total = 0
    cdef long long left, right
    for i in range(m):
        x = seq[i]
        j = i
        while j > 0 and d[j - 1] < x:
            d[j] = d[j - 1]
            j -= 1
        d[j] = x
        total += x
    if total % 2:
        return 0
    left = 0
    for k in range(1, m + 1):
        left += d[k - 1]
        right = <long long>k * (k - 1)
        for i in range(k, m):
            right += d[i] if d[i] < k else k
        if left > right:
            return 0
    return 1


def erdos_gallai(seq):
    cdef int buf[MAXN]
    cdef int m = len(seq)
    if m > MAXN:
        raise ValueError("sequence longer than 64")
    for i in range(m):
        buf[i] = seq[i]
    return bool(erdos_gallai_c(buf, m))


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------

cdef struct Canon:
    int n
    uint64_t adj[MAXN]
    int autos[MAX_AUTOS][MAXN]
    int nautos
    uint64_t best_rows[MAXN]
    int best_order[MAXN]
    int has_best
    long long nodes
    int sig[MAXN][MAXN]


cdef int sig_less(Canon* c, int a, int b, int ncells) noexcept nogil:
    cdef int k
    for k in range(ncells):
        if c.sig[a][k] != c.sig[b][k]:
            return c.sig[a][k] < c.sig[b][k]
    return a < b


cdef int sig_equal(Canon* c, int a, int b, int ncells) noexcept nogil:
    cdef int k
    for k in range(ncells):
        if c.sig[a][k] != c.sig[b][k]:
            return 0
    return 1


cdef void refine(Canon* c, int* lab, int* cstart, int* ncells_p) noexcept nogil:
    cdef uint64_t masks[MAXN]
    cdef int newlab[MAXN]
    cdef int newstart[MAXN + 1]
    cdef int tmp[MAXN]
    cdef int n = c.n
    cdef int ncells, newn, changed, k, kk, s, e, i, j, v, x, cnt
    while True:
        ncells = ncells_p[0]
        for k in range(ncells):
            masks[k] = 0
            for i in range(cstart[k], cstart[k + 1]):
                masks[k] |= bit(lab[i])
        changed = 0
        newn = 0
        cnt = 0
        for k in range(ncells):
            s = cstart[k]
            e = cstart[k + 1]
            if e - s == 1:
                newstart[newn] = cnt
                newn += 1
                newlab[cnt] = lab[s]
                cnt += 1
                continue
            for i in range(s, e):
                v = lab[i]
                for kk in range(ncells):
                    c.sig[v][kk] = popc(c.adj[v] & masks[kk])
            # insertion sort by (sig, vertex)
            for i in range(e - s):
                x = lab[s + i]
                j = i
                while j > 0 and sig_less(c, x, tmp[j - 1], ncells):
                    tmp[j] = tmp[j - 1]
                    j -= 1
                tmp[j] = x
            newstart[newn] = cnt
            newn += 1
            newlab[cnt] = tmp[0]
            cnt += 1
            for i in range(1, e - s):
                if not sig_equal(c, tmp[i], tmp[i - 1], ncells):
                    newstart[newn] = cnt
                    newn += 1
                    changed = 1
                newlab[cnt] = tmp[i]
                cnt += 1
        newstart[newn] = n
        for i in range(n):
            lab[i] = newlab[i]
        for k in range(newn + 1):
            cstart[k] = newstart[k]
        ncells_p[0] = newn
        if not changed:
            return


cdef int find_root(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef int same_orbit(Canon* c, int v, int* explored, int nexp, int* prefix, int plen) noexcept nogil:
    cdef int parent[MAXN]
    cdef int g, i, x, a, b, ok, ngens = 0, root
    cdef int n = c.n
    for x in range(n):
        parent[x] = x
    for g in range(c.nautos):
        ok = 1
        for i in range(plen):
            if c.autos[g][prefix[i]] != prefix[i]:
                ok = 0
                break
        if not ok:
            continue
        ngens += 1
        for x in range(n):
            a = find_root(parent, x)
            b = find_root(parent, c.autos[g][x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    if ngens == 0:
        return 0
    root = find_root(parent, v)
    for i in range(nexp):
        if find_root(parent, explored[i]) == root:
            return 1
    return 0


cdef void canon_leaf(Canon* c, int* lab) noexcept nogil:
    cdef int pos[MAXN]
    cdef uint64_t rows[MAXN]
    cdef int gamma[MAXN]
    cdef int n = c.n
    cdef int i, cmp, nontrivial
    cdef uint64_t a, r
    for i in range(n):
        pos[lab[i]] = i
    for i in range(n):
        a = c.adj[lab[i]]
        r = 0
        while a:
            r |= bit(pos[ctz(a)])
            a &= a - 1
        rows[i] = r
    cmp = 0
    if c.has_best:
        for i in range(n):
            if rows[i] != c.best_rows[i]:
                cmp = 1 if rows[i] > c.best_rows[i] else -1
                break
    if not c.has_best or cmp > 0:
        c.has_best = 1
        for i in range(n):
            c.best_rows[i] = rows[i]
            c.best_order[i] = lab[i]
    elif cmp == 0:
        nontrivial = 0
        for i in range(n):
            gamma[lab[i]] = c.best_order[i]
        for i in range(n):
            if gamma[i] != i:
                nontrivial = 1
                break
        if nontrivial and c.nautos < MAX_AUTOS:
            for i in range(n):
                c.autos[c.nautos][i] = gamma[i]
            c.nautos += 1


cdef void canon_search(Canon* c, int* lab, int* cstart, int ncells, int* prefix, int plen) noexcept nogil:
    cdef int child_lab[MAXN]
    cdef int child_start[MAXN + 1]
    cdef int explored[MAXN]
    cdef int cell[MAXN]
    cdef int nexp = 0
    cdef int t = -1
    cdef int k, s, e, i, j, v, m, child_n
    c.nodes += 1
    for k in range(ncells):
        if cstart[k + 1] - cstart[k] > 1:
            t = k
            break
    if t < 0:
        canon_leaf(c, lab)
        return
    s = cstart[t]
    e = cstart[t + 1]
    m = e - s
    for i in range(m):
        cell[i] = lab[s + i]
    for i in range(m):
        v = cell[i]
        if nexp > 0 and same_orbit(c, v, explored, nexp, prefix, plen):
            continue
        explored[nexp] = v
        nexp += 1
        memcpy(child_lab, lab, c.n * sizeof(int))
        child_lab[s] = v
        j = s + 1
        for k in range(m):
            if cell[k] != v:
                child_lab[j] = cell[k]
                j += 1
        for k in range(t + 1):
            child_start[k] = cstart[k]
        child_start[t + 1] = s + 1
        for k in range(t + 1, ncells + 1):
            child_start[k + 1] = cstart[k]
        child_n = ncells + 1
        refine(c, child_lab, child_start, &child_n)
        prefix[plen] = v
        canon_search(c, child_lab, child_start, child_n, prefix, plen + 1)


def canon(int n, adj):
    """Canonical adjacency rows and the vertex order that produces them."""
    if n == 0:
        return (), ()
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    cdef Canon* c = <Canon*> PyMem_Malloc(sizeof(Canon))
    if c == NULL:
        raise MemoryError()
    cdef int lab[MAXN]
    cdef int cstart[MAXN + 1]
    cdef int prefix[MAXN]
    cdef int ncells = 1
    cdef int i
    try:
        c.n = n
        c.nautos = 0
        c.has_best = 0
        c.nodes = 0
        for i in range(n):
            c.adj[i] = adj[i]
            lab[i] = i
        cstart[0] = 0
        cstart[1] = n
        refine(c, lab, cstart, &ncells)
        canon_search(c, lab, cstart, ncells, prefix, 0)
        rows = tuple([c.best_rows[i] for i in range(n)])
        order = tuple([c.best_order[i] for i in range(n)])
    finally:
        PyMem_Free(c)
    return rows, order



# ---------------------------------------------------------------------------
# subgraph embedding
# ---------------------------------------------------------------------------

cdef struct Embed:
    int n
    uint64_t pat[MAXN]
    uint64_t host[MAXN]
    int order[MAXN]
    int twin_prev[MAXN]
    uint64_t ok_mask[MAXN]
    int back[MAXN][MAXN]
    int nback[MAXN]
    int image[MAXN]
    Meter meter


cdef inline int twins(uint64_t* adj, int p, int q) noexcept nogil:
    return (adj[p] & ~bit(q)) == (adj[q] & ~bit(p))


cdef int embed_rec(Embed* s, int i, uint64_t used) noexcept nogil:
    cdef int p, tp, k, r
    cdef uint64_t cand, b
    if i == s.n:
        return 1
    if tick(&s.meter):
        return -1
    p = s.order[i]
    cand = s.ok_mask[p] & ~used
    for k in range(s.nback[i]):
        cand &= s.host[s.image[s.back[i][k]]]
    tp = s.twin_prev[p]
    if tp >= 0:
        cand &= ~((bit(s.image[tp]) << 1) - 1)
    while cand:
        b = cand & (~cand + 1)
        cand ^= b
        s.image[p] = ctz(b)
        r = embed_rec(s, i + 1, used | b)
        if r != 0:
            return r
    s.image[p] = -1
    return 0


def embed(int n, pat, host, long long node_limit, double deadline):
    """Injective map of pattern vertices into host vertices carrying edges to edges."""
    if n == 0:
        return FOUND, [], 0
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    cdef Embed* s = <Embed*> PyMem_Malloc(sizeof(Embed))
    if s == NULL:
        raise MemoryError()
    cdef int pdeg[MAXN]
    cdef int hdeg[MAXN]
    cdef int ps[MAXN]
    cdef int hs[MAXN]
    cdef int i, j, v, p, t, best, bk0, bk1, k0, k1, r, x
    cdef uint64_t placed, seen, m
    try:
        s.n = n
        for v in range(n):
            s.pat[v] = pat[v]
            s.host[v] = host[v]
            pdeg[v] = popc(s.pat[v])
            hdeg[v] = popc(s.host[v])
        for i in range(n):
            x = pdeg[i]
            j = i
            while j > 0 and ps[j - 1] < x:
                ps[j] = ps[j - 1]
                j -= 1
            ps[j] = x
            x = hdeg[i]
            j = i
            while j > 0 and hs[j - 1] < x:
                hs[j] = hs[j - 1]
                j -= 1
            hs[j] = x
        for i in range(n):
            if ps[i] > hs[i]:
                return EXHAUSTED, None, 0
        placed = 0
        for i in range(n):
            best = -1
            bk0 = -1
            bk1 = -1
            for v in range(n):
                if (placed >> v) & 1:
                    continue
                k0 = popc(s.pat[v] & placed)
                k1 = pdeg[v]
                if k0 > bk0 or (k0 == bk0 and k1 > bk1):
                    best = v
                    bk0 = k0
                    bk1 = k1
            s.order[i] = best
            placed |= bit(best)
        for i in range(n):
            p = s.order[i]
            s.twin_prev[p] = -1
            for j in range(i - 1, -1, -1):
                if twins(s.pat, p, s.order[j]):
                    s.twin_prev[p] = s.order[j]
                    break
        for p in range(n):
            m = 0
            for t in range(n):
                if hdeg[t] >= pdeg[p]:
                    m |= bit(t)
            s.ok_mask[p] = m
        seen = 0
        for i in range(n):
            p = s.order[i]
            s.nback[i] = 0
            for j in range(n):
                x = s.order[j]
                if ((seen >> x) & 1) and ((s.pat[p] >> x) & 1):
                    s.back[i][s.nback[i]] = x
                    s.nback[i] += 1
            seen |= bit(p)
        for v in range(n):
            s.image[v] = -1
        s.meter.nodes = 0
        s.meter.limit = node_limit
        s.meter.deadline = deadline
        s.meter.out = 0
        r = embed_rec(s, 0, 0)
        nodes = s.meter.nodes
        if r < 0:
            return BUDGET, None, nodes
        if r > 0:
            return FOUND, [s.image[v] for v in range(n)], nodes
        return EXHAUSTED, None, nodes
    finally:
        PyMem_Free(s)


# ---------------------------------------------------------------------------
# f-factors and degree-sequence packing
# ---------------------------------------------------------------------------

cdef struct Factor:
    int n
    int order[MAXN]
    uint64_t h[MAXN]
    int res[MAXN]
    uint64_t e[MAXN]
    uint64_t live
    Meter* meter


cdef int factor_feasible(Factor* s, int j) noexcept nogil:
    cdef int seq[MAXN]
    cdef int m = 0
    cdef int k, r
    cdef uint64_t live = s.live & ~below(j)
    for k in range(j, s.n):
        r = s.res[k]
        if r:
            if popc(s.h[k] & live) < r:
                return 0
            seq[m] = r
            m += 1
    return erdos_gallai_c(seq, m)


cdef int factor_place(Factor* s, int i) noexcept nogil:
    cdef uint64_t cand
    while i < s.n and s.res[i] == 0:
        i += 1
    if i == s.n:
        return 1
    cand = s.h[i] & s.live & ~below(i + 1)
    if popc(cand) < s.res[i]:
        return 0
    return factor_pick(s, i, cand)


cdef int factor_pick(Factor* s, int i, uint64_t cand) noexcept nogil:
    cdef uint64_t b
    cdef int w, r
    if s.res[i] == 0:
        if not factor_feasible(s, i + 1):
            return 0
        return factor_place(s, i + 1)
    if tick(s.meter):
        return -1
    while cand:
        if popc(cand) < s.res[i]:
            return 0
        b = cand & (~cand + 1)
        cand ^= b
        w = ctz(b)
        s.res[i] -= 1
        s.res[w] -= 1
        s.e[i] |= b
        s.e[w] |= bit(i)
        if s.res[w] == 0:
            s.live &= ~b
        r = factor_pick(s, i, cand)
        if r != 0:
            return r
        s.res[i] += 1
        s.res[w] += 1
        s.e[i] &= ~b
        s.e[w] &= ~bit(i)
        s.live |= b
    return 0


cdef int run_factor(int n, uint64_t* host, int* f, Meter* meter, uint64_t* out) noexcept nogil:
    # 1 found (out filled), 0 none, -1 budget
    cdef Factor s
    cdef int pos[MAXN]
    cdef int i, j, v, x, total = 0, r
    cdef uint64_t a, m
    for v in range(n):
        if f[v] < 0 or f[v] > popc(host[v]):
            return 0
        total += f[v]
    if total % 2:
        return 0
    s.n = n
    s.meter = meter
    for i in range(n):
        x = i
        j = i
        while j > 0 and (f[s.order[j - 1]] < f[x] or (f[s.order[j - 1]] == f[x] and s.order[j - 1] > x)):
            s.order[j] = s.order[j - 1]
            j -= 1
        s.order[j] = x
    for i in range(n):
        pos[s.order[i]] = i
    s.live = 0
    for i in range(n):
        a = host[s.order[i]]
        m = 0
        while a:
            m |= bit(pos[ctz(a)])
            a &= a - 1
        s.h[i] = m
        s.res[i] = f[s.order[i]]
        s.e[i] = 0
        if s.res[i]:
            s.live |= bit(i)
    if not factor_feasible(&s, 0):
        return 0
    r = factor_place(&s, 0)
    if r <= 0:
        return r
    for i in range(n):
        out[i] = 0
    for i in range(n):
        a = s.e[i]
        while a:
            out[s.order[i]] |= bit(s.order[ctz(a)])
            a &= a - 1
    return 1


def ffactor(int n, host, f, long long node_limit, double deadline):
    """Spanning subgraph of ``host`` in which vertex ``v`` has degree ``f[v]``."""
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    cdef uint64_t h[MAXN]
    cdef uint64_t out[MAXN]
    cdef int ff[MAXN]
    cdef Meter meter
    cdef int i, r
    for i in range(n):
        h[i] = host[i]
        ff[i] = f[i]
    meter.nodes = 0
    meter.limit = node_limit
    meter.deadline = deadline
    meter.out = 0
    r = run_factor(n, h, ff, &meter, out)
    if r < 0:
        return BUDGET, None, meter.nodes
    if r == 0:
        return EXHAUSTED, None, meter.nodes
    return FOUND, [out[i] for i in range(n)], meter.nodes


cdef struct Seq:
    int n
    uint64_t host[MAXN]
    int hdeg[MAXN]
    int counts[MAXN + 1]
    int f[MAXN]
    int free[MAXN]
    int nfree
    int twin_prev[MAXN]
    int distinct[MAXN + 1]
    int ndistinct
    uint64_t out[MAXN]
    Meter meter


cdef int seq_rec(Seq* s, int k) noexcept nogil:
    cdef int v, cap, tp, di, d, r
    if k == s.nfree:
        return run_factor(s.n, s.host, s.f, &s.meter, s.out)
    if tick(&s.meter):
        return -1
    v = s.free[k]
    cap = s.hdeg[v]
    tp = s.twin_prev[v]
    if tp >= 0 and s.f[tp] < cap:
        cap = s.f[tp]
    for di in range(s.ndistinct):
        d = s.distinct[di]
        if d > cap or s.counts[d] == 0:
            continue
        s.counts[d] -= 1
        s.f[v] = d
        r = seq_rec(s, k + 1)
        if r != 0:
            return r
        s.counts[d] += 1
    s.f[v] = -1
    return 0


def seqpack(int n, host, counts, fixed, long long node_limit, double deadline):
    """Subgraph of ``host`` whose degree multiset is given by ``counts``."""
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    counts = list(counts)
    if sum(counts) != n:
        return EXHAUSTED, None, 0
    cdef int L = len(counts)
    if L > MAXN + 1:
        if any(counts[MAXN + 1:]):
            return EXHAUSTED, None, 0
        counts = counts[:MAXN + 1]
        L = MAXN + 1
    cdef Seq* s = <Seq*> PyMem_Malloc(sizeof(Seq))
    if s == NULL:
        raise MemoryError()
    cdef int v, d, i, j, k, x, r, idx
    try:
        s.n = n
        for d in range(MAXN + 1):
            s.counts[d] = counts[d] if d < L else 0
        for v in range(n):
            s.host[v] = host[v]
            s.hdeg[v] = popc(s.host[v])
            s.f[v] = -1
        for v in range(n):
            d = fixed[v]
            if d >= 0:
                if d >= L or s.counts[d] == 0 or d > s.hdeg[v]:
                    return EXHAUSTED, None, 0
                s.counts[d] -= 1
                s.f[v] = d
        s.nfree = 0
        for v in range(n):
            if s.f[v] >= 0:
                continue
            x = v
            j = s.nfree
            while j > 0 and (s.hdeg[s.free[j - 1]] < s.hdeg[x] or
                             (s.hdeg[s.free[j - 1]] == s.hdeg[x] and s.free[j - 1] > x)):
                s.free[j] = s.free[j - 1]
                j -= 1
            s.free[j] = x
            s.nfree += 1
        idx = 0
        for d in range(L - 1, -1, -1):
            for i in range(s.counts[d]):
                if d > s.hdeg[s.free[idx]]:
                    return EXHAUSTED, None, 0
                idx += 1
        for k in range(s.nfree):
            v = s.free[k]
            s.twin_prev[v] = -1
            for j in range(k - 1, -1, -1):
                if twins(s.host, s.free[j], v):
                    s.twin_prev[v] = s.free[j]
                    break
        s.ndistinct = 0
        for d in range(L - 1, -1, -1):
            if s.counts[d]:
                s.distinct[s.ndistinct] = d
                s.ndistinct += 1
        s.meter.nodes = 0
        s.meter.limit = node_limit
        s.meter.deadline = deadline
        s.meter.out = 0
        r = seq_rec(s, 0)
        nodes = s.meter.nodes
        if r < 0:
            return BUDGET, None, nodes
        if r == 0:
            return EXHAUSTED, None, nodes
        return FOUND, [s.out[v] for v in range(n)], nodes
    finally:
        PyMem_Free(s)
