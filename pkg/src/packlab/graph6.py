"""graph6 text encoding (header-less, printable ASCII 63..126)."""

from __future__ import annotations

from .errors import MalformedGraph6
from .graph import Graph


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n + 63]
    if n < 258048:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]


def encode(g: Graph) -> str:
    """graph6 line for ``g`` (no trailing newline)."""
    out = _encode_n(g.n)
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def decode(line: str | bytes) -> Graph:
    """Parse one graph6 line; trailing newline is ignored."""
    data = line.encode("latin-1") if isinstance(line, str) else bytes(line)
    if data.endswith(b"\n"):
        data = data[:-1]
    if data.startswith(b">>graph6<<"):
        raise MalformedGraph6(0, "graph6 header lines are not supported")
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise MalformedGraph6(i, f"byte {c} outside the printable range 63..126")
    if not data:
        raise MalformedGraph6(0, "empty input")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6(len(data), "truncated 8-byte order header")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise MalformedGraph6(len(data), "truncated 4-byte order header")
        n = 0
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise MalformedGraph6(len(data), f"expected {need} body bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise MalformedGraph6(pos + need, f"unexpected trailing bytes after {need} body bytes")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = body[k // 6] - 63
            if c >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6:
        last = body[-1] - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise MalformedGraph6(pos + need - 1, "nonzero padding bits")
    return Graph(n, adj)
