"""Graph packing toolkit: realizations, exact packing solvers, and exhaustive checks."""

from __future__ import annotations

__version__ = "0.1.0"

from .canon import canonical_form, enumerate_graphs, is_isomorphic, isomorphism
from .degseq import DegreeSequence, anchored_realize, degree_sequence, havel_hakimi_realize, is_graphical
from .graph import Graph
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .moves import EdgeExchangeSpec, bad_pairs, edge_exchange, vertex_interchange
from .packing import Mode, PackingResult, SearchBudget, Status, pack_component_wise, pack_embed, pack_sequence
from .recognizers import ExceptionKind, has_dominating_clique, is_split, is_unigraph, match_exceptions

__all__ = [
    "DegreeSequence",
    "EdgeExchangeSpec",
    "ExceptionKind",
    "Graph",
    "Mode",
    "PackingResult",
    "SearchBudget",
    "Status",
    "__version__",
    "anchored_realize",
    "bad_pairs",
    "canonical_form",
    "degree_sequence",
    "edge_exchange",
    "enumerate_graphs",
    "graph6_decode",
    "graph6_encode",
    "has_dominating_clique",
    "havel_hakimi_realize",
    "is_graphical",
    "is_isomorphic",
    "is_split",
    "is_unigraph",
    "isomorphism",
    "match_exceptions",
    "pack_component_wise",
    "pack_embed",
    "pack_sequence",
    "vertex_interchange",
]
