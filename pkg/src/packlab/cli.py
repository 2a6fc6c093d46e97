"""Command-line front end.

Exit codes: 0 completed, 1 counterexample (or invalid certificate),
2 input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from .canon import max_order
from .certificate import SCHEMA, Certificate, certificate_validate, make_certificate
from .degseq import DegreeSequence, havel_hakimi_realize, is_graphical
from .errors import (
    BadParameter,
    DecompositionNotFound,
    HypothesisUnmet,
    MalformedGraph6,
    NotRegular,
    OrderTooLarge,
    PacklabError,
    SchemaViolation,
)
from .graph import Graph
from .graph6 import decode, encode
from .hypotheses import check_bec, check_cor4, check_katerinis, check_main, check_theorem5_hypothesis, check_theorem7_hypothesis
from .packing import Mode, SearchBudget, Status, pack_component_wise, pack_embed, pack_sequence
from .pipelines import (
    pipeline_large_matching,
    pipeline_lemma9,
    pipeline_split,
    pipeline_theorem5,
    pipeline_theorem7,
    pipeline_theorem10,
    pipeline_theorem12,
)
from .recognizers import exception_tags, is_unigraph, match_exceptions
from .verify import THEOREMS, census, verify_theorem

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

_SOLVERS = {
    Mode.EMBED.value: pack_embed,
    Mode.SEQUENCE.value: pack_sequence,
    Mode.COMPONENT_WISE.value: pack_component_wise,
}

# hypothesis-only statements: (checker, solver demanded when it holds)
_CHECKS = {
    "bec": (check_bec, pack_component_wise),
    "bec-half": (check_main, pack_sequence),
    "cor4": (check_cor4, pack_sequence),
    "katerinis": (check_katerinis, pack_sequence),
}

_PIPELINES = {
    "lemma9": pipeline_lemma9,
    "thm5": pipeline_theorem5,
    "thm10": pipeline_theorem10,
    "thm12": pipeline_theorem12,
    "large-matching": pipeline_large_matching,
    "split": pipeline_split,
}


class InputError(Exception):
    pass


def _graph(text: str, label: str) -> Graph:
    try:
        return decode(text.strip())
    except MalformedGraph6 as exc:
        raise InputError(f"{label}: malformed graph6 at byte {exc.offset}: {exc}") from None


def _pair(args) -> tuple[Graph, Graph]:
    g1, g2 = _graph(args.g1, "first graph"), _graph(args.g2, "second graph")
    if g1.n != g2.n:
        raise InputError(f"graphs must have the same order, got {g1.n} and {g2.n}")
    return g1, g2


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(args.nodes, args.seconds)
    except BadParameter as exc:
        raise InputError(str(exc)) from None


def _emit(args, doc: dict, text: str) -> None:
    out = json.dumps(doc, sort_keys=True, indent=2) if args.json else text
    path = getattr(args, "output", None)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _status_exit(status: Status) -> int:
    return EXIT_BUDGET if status is Status.BUDGET_EXHAUSTED else EXIT_OK


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_realize(args) -> int:
    try:
        seq = DegreeSequence.parse(args.sequence)
    except (ValueError, PacklabError) as exc:
        raise InputError(f"cannot parse degree sequence {args.sequence!r}: {exc}") from None
    if not is_graphical(seq):
        raise InputError(f"{seq} is not graphical")
    g = havel_hakimi_realize(seq)
    doc = {"schema": SCHEMA, "kind": "realization", "sequence": list(seq.terms), "graph6": encode(g)}
    _emit(args, doc, encode(g))
    return EXIT_OK


def cmd_pack(args) -> int:
    g1, g2 = _pair(args)
    res = _SOLVERS[args.mode](g1, g2, _budget(args))
    cert = make_certificate(g1, g2, res)
    text = f"status {res.status.value}\nexceptions {cert.exceptions}"
    if res.packed:
        text += f"\nwitness {cert.witness}"
    _emit(args, cert.as_dict(), text)
    return _status_exit(res.status)


def cmd_check(args) -> int:
    g1, g2 = _pair(args)
    budget = _budget(args)
    theorem = args.theorem
    exceptions = exception_tags(match_exceptions(g1, g2))
    doc = {"schema": SCHEMA, "kind": "check", "theorem": theorem, "instance": {"g1": encode(g1), "g2": encode(g2)}, "exceptions": exceptions}
    try:
        if theorem in _CHECKS:
            checker, solver = _CHECKS[theorem]
            report = checker(g1, g2)
            doc["hypothesis"] = report.as_dict()
            result = solver(g1, g2, budget) if report.holds else None
        elif theorem == "thm7":
            report = check_theorem7_hypothesis(g1, g2, args.k, budget)
            doc["hypothesis"] = report.as_dict()
            result = pipeline_theorem7(g1, g2, args.k, budget) if report.holds else None
        else:
            if theorem == "thm5":
                doc["hypothesis"] = check_theorem5_hypothesis(g1, g2).as_dict()
            result = _PIPELINES[theorem](g1, g2, budget=budget)
    except (HypothesisUnmet, DecompositionNotFound, NotRegular) as exc:
        doc["hypothesis_unmet"] = f"{type(exc).__name__}: {exc}"
        result = None
    except BadParameter as exc:
        raise InputError(str(exc)) from None
    lines = [f"theorem {theorem}", f"exceptions {exceptions}"]
    if "hypothesis" in doc:
        lines.append(f"hypothesis holds: {doc['hypothesis']['holds']}")
    if "hypothesis_unmet" in doc:
        lines.append(f"hypothesis unmet: {doc['hypothesis_unmet']}")
    code = EXIT_OK
    if result is not None:
        doc["result"] = make_certificate(g1, g2, result).as_dict()
        lines.append(f"status {result.status.value}")
        if "route" in result.stats:
            lines.append(f"route {result.stats['route']}")
        excluded = theorem == "bec-half" and exceptions or theorem == "thm5" and result.stats.get("route") == "exception"
        if result.status is Status.UNPACKABLE and not excluded:
            code = EXIT_COUNTEREXAMPLE
        elif result.status is Status.BUDGET_EXHAUSTED:
            code = EXIT_BUDGET
    _emit(args, doc, "\n".join(lines))
    return code


def cmd_verify(args) -> int:
    if args.workers < 1:
        raise InputError("--workers must be positive")
    try:
        rep = verify_theorem(args.theorem, args.max_order, args.min_order, _budget(args), args.workers, args.seed)
    except (OrderTooLarge, BadParameter) as exc:
        raise InputError(str(exc)) from None
    doc = rep.as_dict()
    c = doc["counts"]
    text = "\n".join(
        [
            f"theorem {rep.theorem}, orders {rep.min_order}..{rep.max_order}",
            f"instances {c['instances']}, hypothesis satisfied {c['hypothesis_satisfied']}",
            f"packed {c['packed']}, excluded {c['excluded_by_exception']}, budget exhausted {c['budget_exhausted']}",
            f"counterexamples {c['counterexamples']}",
        ]
        + [f"  {a} {b}" for a, b in rep.counterexamples]
    )
    _emit(args, doc, text)
    if rep.counterexamples:
        return EXIT_COUNTEREXAMPLE
    return EXIT_BUDGET if rep.budget_exhausted else EXIT_OK


def cmd_unigraph(args) -> int:
    g = _graph(args.graph, "graph")
    try:
        val = is_unigraph(g)
    except OrderTooLarge as exc:
        raise InputError(str(exc)) from None
    _emit(args, {"schema": SCHEMA, "kind": "unigraph", "graph6": encode(g), "unigraph": val}, "true" if val else "false")
    return EXIT_OK


def cmd_census(args) -> int:
    if args.max_order > max_order():
        raise InputError(f"max order {args.max_order} exceeds the enumeration cap {max_order()} (PACKLAB_MAX_ORDER)")
    rows = {str(n): census(n) for n in range(args.max_order + 1)}
    keys = list(rows["0"])
    text = "\n".join(["n " + " ".join(keys)] + [f"{n} " + " ".join(str(r.get(k, "-")) for k in keys) for n, r in rows.items()])
    _emit(args, {"schema": SCHEMA, "kind": "census", "orders": rows}, text)
    return EXIT_OK


def cmd_validate(args) -> int:
    raw = sys.stdin.read() if args.file == "-" else _read(args.file)
    try:
        ok = certificate_validate(raw)
    except SchemaViolation as exc:
        raise InputError(f"schema violation: {exc}") from None
    _emit(args, {"schema": SCHEMA, "kind": "validation", "valid": ok}, "valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="packlab", description="Graph packing laboratory.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, budget: bool = True) -> None:
        sp.add_argument("--json", action="store_true", help="emit a JSON document")
        if budget:
            sp.add_argument("--nodes", type=int, default=10**7, help="search node limit per solver call")
            sp.add_argument("--seconds", type=float, default=30.0, help="wall-clock limit per solver call")

    sp = sub.add_parser("realize", help="realize a degree sequence (comma separated)")
    sp.add_argument("sequence")
    common(sp, budget=False)
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("pack", help="pack two graphs given in graph6")
    sp.add_argument("--mode", choices=sorted(_SOLVERS), default=Mode.EMBED.value)
    sp.add_argument("g1")
    sp.add_argument("g2")
    common(sp)
    sp.set_defaults(func=cmd_pack)

    sp = sub.add_parser("check", help="evaluate a statement's hypothesis and run its construction")
    sp.add_argument("--theorem", required=True, choices=sorted(list(_CHECKS) + list(_PIPELINES) + ["thm7"]))
    sp.add_argument("--k", type=int, default=1, help="factor degree for thm7")
    sp.add_argument("g1")
    sp.add_argument("g2")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("verify", help="exhaustively check a statement over small graph pairs")
    sp.add_argument("--theorem", required=True, choices=THEOREMS)
    sp.add_argument("--max-order", type=int, required=True)
    sp.add_argument("--min-order", type=int, default=1)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--output", help="write the report to this path")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("unigraph", help="decide whether a graph is a unigraph")
    sp.add_argument("graph")
    common(sp, budget=False)
    sp.set_defaults(func=cmd_unigraph)

    sp = sub.add_parser("census", help="count graph classes by order")
    sp.add_argument("--max-order", type=int, required=True)
    common(sp, budget=False)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("validate", help="recheck a certificate file ('-' for stdin)")
    sp.add_argument("file")
    common(sp, budget=False)
    sp.set_defaults(func=cmd_validate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"packlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
