"""Self-checking JSON certificates for single packing instances."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .errors import MalformedGraph6, SchemaViolation, SizeMismatch
from .graph import Graph
from .graph6 import decode, encode
from .hypotheses import check_bec, check_cor4, check_main
from .packing import Mode, PackingResult, Status, validate_witness
from .recognizers import exception_tags, match_exceptions

SCHEMA = "packlab/1"

_REPORTS = {"bec": check_bec, "main": check_main, "cor4": check_cor4}


@dataclass
class Certificate:
    g1: str
    g2: str
    mode: str
    status: str
    witness: str | None = None
    mapping: list[int] | None = None
    exceptions: list[str] = field(default_factory=list)
    hypotheses: dict[str, dict] = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    version: str = __version__

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "certificate",
            "instance": {"g1": self.g1, "g2": self.g2},
            "mode": self.mode,
            "status": self.status,
            "witness": self.witness,
            "mapping": self.mapping,
            "exceptions": list(self.exceptions),
            "hypotheses": self.hypotheses,
            "stats": self.stats,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, doc: dict) -> Certificate:
        _require_schema(doc)
        try:
            inst = doc["instance"]
            cert = cls(
                g1=inst["g1"],
                g2=inst["g2"],
                mode=doc["mode"],
                status=doc["status"],
                witness=doc.get("witness"),
                mapping=doc.get("mapping"),
                exceptions=list(doc.get("exceptions", [])),
                hypotheses=dict(doc.get("hypotheses", {})),
                stats=dict(doc.get("stats", {})),
                version=doc.get("version", ""),
            )
        except (KeyError, TypeError) as exc:
            raise SchemaViolation(f"missing or malformed field: {exc}") from None
        return cert


def _require_schema(doc) -> None:
    if not isinstance(doc, dict):
        raise SchemaViolation("certificate must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise SchemaViolation(f"schema must be {SCHEMA!r}, got {doc.get('schema')!r}")
    if doc.get("kind", "certificate") != "certificate":
        raise SchemaViolation(f"kind must be 'certificate', got {doc.get('kind')!r}")


def make_certificate(g1: Graph, g2: Graph, result: PackingResult) -> Certificate:
    stats = {"nodes": int(result.stats.get("nodes", 0)), "millis": int(round(1000 * result.stats.get("seconds", 0.0)))}
    for key in ("route", "anomaly"):
        if key in result.stats:
            stats[key] = result.stats[key]
    return Certificate(
        g1=encode(g1),
        g2=encode(g2),
        mode=result.mode.value,
        status=result.status.value,
        witness=encode(result.witness) if result.packed else None,
        mapping=list(result.mapping) if result.packed and result.mapping is not None else None,
        exceptions=exception_tags(match_exceptions(g1, g2)),
        hypotheses={name: fn(g1, g2).as_dict() for name, fn in _REPORTS.items()},
        stats=stats,
    )


def certificate_validate(cert: Certificate | dict | str) -> bool:
    """Recheck a certificate from scratch.

    Structural problems raise SchemaViolation; a well-formed certificate
    whose claims do not hold returns False.
    """
    if isinstance(cert, str):
        try:
            cert = json.loads(cert)
        except json.JSONDecodeError as exc:
            raise SchemaViolation(f"not JSON: {exc}") from None
    if isinstance(cert, dict):
        cert = Certificate.from_dict(cert)
    try:
        mode = Mode(cert.mode)
        status = Status(cert.status)
    except ValueError as exc:
        raise SchemaViolation(str(exc)) from None
    try:
        g1, g2 = decode(cert.g1), decode(cert.g2)
        witness = decode(cert.witness) if cert.witness is not None else None
    except (MalformedGraph6, TypeError, AttributeError) as exc:
        raise SchemaViolation(f"bad graph6 field: {exc}") from None
    if (status is Status.PACKED) != (witness is not None):
        raise SchemaViolation("a witness must be present exactly when the status is PACKED")
    if g1.n != g2.n:
        return False
    if witness is not None:
        mapping = cert.mapping
        if mapping is not None and (sorted(mapping) != list(range(g1.n))):
            return False
        res = PackingResult(status, mode, witness=witness, mapping=mapping)
        try:
            if validate_witness(res, g1, g2):
                return False
        except SizeMismatch:
            return False
    if sorted(cert.exceptions) != exception_tags(match_exceptions(g1, g2)):
        return False
    for name, claimed in cert.hypotheses.items():
        fn = _REPORTS.get(name)
        if fn is None:
            raise SchemaViolation(f"unknown hypothesis report {name!r}")
        if fn(g1, g2).as_dict() != claimed:
            return False
    return True
