"""Search kernels with a compiled backend and a pure-Python fallback.

The compiled module is used when it imports and ``PACKLAB_PURE_PYTHON`` is
unset.  It handles graphs of at most 64 vertices; larger inputs are routed to
the Python kernels automatically.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

FOUND = _pykernels.FOUND
EXHAUSTED = _pykernels.EXHAUSTED
BUDGET = _pykernels.BUDGET

_compiled: ModuleType | None
try:
    from . import _ckernels as _compiled  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build
    _compiled = None

COMPILED_LIMIT = 64


def compiled_available() -> bool:
    return _compiled is not None


def backend_name() -> str:
    if _compiled is not None and not os.environ.get("PACKLAB_PURE_PYTHON"):
        return "compiled"
    return "python"


def _pick(n: int) -> ModuleType:
    if n <= COMPILED_LIMIT and backend_name() == "compiled":
        return _compiled  # type: ignore[return-value]
    return _pykernels


def erdos_gallai(seq: list[int]) -> bool:
    return _pick(len(seq)).erdos_gallai(list(seq))


def canon(n: int, adj):
    return _pick(n).canon(n, list(adj))


def embed(n: int, pat, host, node_limit: int, deadline: float):
    return _pick(n).embed(n, list(pat), list(host), node_limit, deadline)


def ffactor(n: int, host, f, node_limit: int, deadline: float):
    return _pick(n).ffactor(n, list(host), list(f), node_limit, deadline)


def seqpack(n: int, host, counts, fixed, node_limit: int, deadline: float):
    return _pick(n).seqpack(n, list(host), list(counts), list(fixed), node_limit, deadline)
