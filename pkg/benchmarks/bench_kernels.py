"""Compare the compiled and pure-Python search kernels on identical workloads.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.
"""

from __future__ import annotations

import argparse
import random
import time

from packlab import _kernels
from packlab._kernels import _pykernels
from packlab.canon import enumerate_graphs
from packlab.graph import Graph

FAR = 10**12
NODES = 10**7


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def _workloads(seed: int):
    rng = random.Random(seed)
    graphs6 = enumerate_graphs(6)
    canon_inputs = [(g.n, list(g.adj)) for g in enumerate_graphs(7)]
    embed_inputs = [(6, list(a.adj), list(b.adj), NODES, FAR) for a in graphs6[::4] for b in graphs6[::4]]
    ffactor_inputs = []
    while len(ffactor_inputs) < 300:
        h = _random_graph(rng, 10, 0.5)
        f = [rng.randint(0, h.degree(v)) for v in range(10)]
        if sum(f) % 2 == 0:
            ffactor_inputs.append((10, list(h.adj), f, NODES, FAR))
    return {
        "canon (all graphs, n=7)": ("canon", canon_inputs),
        "embed (sampled pairs, n=6)": ("embed", embed_inputs),
        "ffactor (random, n=10)": ("ffactor", ffactor_inputs),
    }


def _time(module, name: str, inputs, repeat: int) -> tuple[float, list]:
    fn = getattr(module, name)
    best = float("inf")
    out: list = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [fn(*args) for args in inputs]
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if not _kernels.compiled_available():
        print("compiled kernels are not built; only the Python backend is available")
        return
    from packlab._kernels import _ckernels

    print(f"{'workload':30} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for label, (name, inputs) in _workloads(args.seed).items():
        tp, outp = _time(_pykernels, name, inputs, args.repeat)
        tc, outc = _time(_ckernels, name, inputs, args.repeat)
        if outp != outc:
            raise SystemExit(f"backends disagree on {label}")
        print(f"{label:30} {tp:10.3f} {tc:11.3f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
