from __future__ import annotations

import json

import pytest

from packlab.certificate import Certificate, certificate_validate, make_certificate
from packlab.errors import SchemaViolation
from packlab.families import build_complete, build_complete_bipartite, build_cycle_edges, build_disjoint_copies, disjoint_union
from packlab.graph6 import encode
from packlab.packing import pack_component_wise, pack_embed, pack_sequence

K = build_complete


def _cert(solver, g1, g2) -> dict:
    return make_certificate(g1, g2, solver(g1, g2)).as_dict()


def test_emitted_certificates_validate():
    pairs = [
        (disjoint_union(build_cycle_edges(5), K(1)), build_disjoint_copies(2, K(3))),
        (build_disjoint_copies(2, K(2)), build_complete_bipartite(2, 2)),
        (build_cycle_edges(6), build_disjoint_copies(2, K(3))),
    ]
    for g1, g2 in pairs:
        for solver in (pack_embed, pack_sequence, pack_component_wise):
            doc = _cert(solver, g1, g2)
            assert certificate_validate(doc)
            assert certificate_validate(json.dumps(doc))
            assert certificate_validate(Certificate.from_dict(doc))


def test_f1_certificate_fields():
    doc = _cert(pack_sequence, disjoint_union(build_cycle_edges(5), K(1)), build_disjoint_copies(2, K(3)))
    assert doc["status"] == "UNPACKABLE" and doc["exceptions"] == ["F1"] and doc["witness"] is None
    assert doc["hypotheses"]["main"]["holds"] is True
    assert doc["schema"] == "packlab/1"


def test_tampered_witness_rejected():
    g1, g2 = build_disjoint_copies(2, K(2)), build_complete_bipartite(2, 2)
    doc = _cert(pack_embed, g1, g2)
    doc["witness"] = encode(build_complete_bipartite(2, 2))
    doc["mapping"] = None
    assert certificate_validate(doc) is False


def test_tampered_claims_rejected():
    g1, g2 = build_cycle_edges(5), build_cycle_edges(5)
    doc = _cert(pack_embed, g1, g2)
    doc["exceptions"] = ["F1"]
    assert certificate_validate(doc) is False
    doc = _cert(pack_embed, g1, g2)
    doc["hypotheses"]["bec"]["holds"] = True
    assert certificate_validate(doc) is False


def test_schema_violations():
    g1, g2 = build_cycle_edges(5), build_cycle_edges(5)
    doc = _cert(pack_embed, g1, g2)
    bad = dict(doc, witness=None)
    with pytest.raises(SchemaViolation):
        certificate_validate(bad)
    with pytest.raises(SchemaViolation):
        certificate_validate(dict(doc, schema="other/2"))
    with pytest.raises(SchemaViolation):
        certificate_validate(dict(doc, status="MAYBE"))
    with pytest.raises(SchemaViolation):
        certificate_validate("{not json")
    with pytest.raises(SchemaViolation):
        certificate_validate({"schema": "packlab/1"})
    with pytest.raises(SchemaViolation):
        certificate_validate(dict(doc, instance={"g1": "D\x01", "g2": "D??"}))
