from __future__ import annotations

import random

import networkx as nx
import pytest

from _oracles import random_graph, to_nx
from packlab.errors import MalformedGraph6
from packlab.families import build_complete
from packlab.graph import Graph
from packlab.graph6 import decode, encode


def _nx_encode(g: Graph) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode("ascii").strip()


def test_single_vertex():
    assert encode(Graph(1)) == "@"


def test_roundtrip_k4():
    assert decode(encode(build_complete(4))) == build_complete(4)


@pytest.mark.parametrize("n", [0, 1, 2, 5, 9, 62, 63, 64, 100])
def test_matches_networkx_encoder(n):
    rng = random.Random(n)
    for _ in range(5 if n > 20 else 30):
        g = random_graph(rng, n, rng.random())
        text = encode(g)
        assert text == _nx_encode(g)
        assert decode(text) == g
        assert decode(text.encode("ascii")) == g


def test_decodes_networkx_output():
    rng = random.Random(3)
    for _ in range(100):
        g = random_graph(rng, rng.randint(0, 12))
        assert decode(_nx_encode(g)) == g


@pytest.mark.parametrize(
    "bad",
    ["garbage\x01", "", "D", "D?", "D?????", "A_?", "B\x7f", "~"],
)
def test_malformed(bad):
    with pytest.raises(MalformedGraph6) as info:
        decode(bad)
    assert info.value.offset >= 0


def test_nonzero_padding_rejected():
    # n=2 uses one body byte with a single meaningful bit
    assert decode("A_") == Graph.from_edges(2, [(0, 1)])
    with pytest.raises(MalformedGraph6):
        decode("Aa")
