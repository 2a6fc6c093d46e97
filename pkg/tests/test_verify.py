from __future__ import annotations

import json
import random

import pytest

from _oracles import brute_sequence
from packlab.canon import enumerate_graphs
from packlab.errors import BadParameter, OrderTooLarge
from packlab.graph6 import decode
from packlab.hypotheses import check_main
from packlab.packing import SearchBudget, pack_embed, pack_sequence
from packlab.recognizers import match_exceptions
from packlab.verify import THEOREMS, census, verify_theorem


@pytest.mark.parametrize("theorem", THEOREMS)
def test_reports_are_consistent(theorem):
    rep = verify_theorem(theorem, 5)
    assert rep.is_consistent()
    assert rep.counterexamples == []
    assert rep.budget_exhausted == 0
    doc = rep.as_dict()
    assert doc["schema"] == "packlab/1"
    assert "seconds" not in json.dumps(doc)


def test_bec_half_exclusions_confirmed():
    rep = verify_theorem("bec-half", 6)
    assert rep.excluded > 0
    assert rep.notes == {"excluded_confirmed_unpackable": rep.excluded}


def test_bec_half_counts_against_direct_loop():
    rep = verify_theorem("bec-half", 4)
    sat = packed = excluded = 0
    for n in range(1, 5):
        gs = enumerate_graphs(n)
        for g1 in gs:
            for g2 in gs:
                if not check_main(g1, g2).holds:
                    continue
                sat += 1
                if match_exceptions(g1, g2):
                    excluded += 1
                elif brute_sequence(g1, g2):
                    packed += 1
    assert (rep.hypothesis_satisfied, rep.packed, rep.excluded) == (sat, packed, excluded)


def test_budget_exhaustion_counted():
    rep = verify_theorem("problem1", 5, min_order=5, budget=SearchBudget(nodes=1))
    assert rep.is_consistent()
    assert rep.budget_exhausted > 0
    assert len(rep.exhausted_instances) == rep.budget_exhausted


def test_workers_do_not_change_report():
    a = verify_theorem("cor4", 5, workers=1).as_dict()
    b = verify_theorem("cor4", 5, workers=3).as_dict()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_errors(monkeypatch):
    with pytest.raises(BadParameter):
        verify_theorem("nope", 3)
    with pytest.raises(BadParameter):
        verify_theorem("cor4", 3, workers=0)
    monkeypatch.setenv("PACKLAB_MAX_ORDER", "4")
    with pytest.raises(OrderTooLarge):
        verify_theorem("cor4", 5)


def test_labeled_pairs_spot_check():
    # verdicts and hypotheses are invariant under relabeling either graph
    rng = random.Random(0)
    for n in range(2, 7):
        gs = enumerate_graphs(n)
        for _ in range(1000 if n <= 4 else 300):
            g1, g2 = rng.choice(gs), rng.choice(gs)
            p = list(range(n))
            rng.shuffle(p)
            h1 = g1.relabel(p)
            rng.shuffle(p)
            h2 = g2.relabel(p)
            assert check_main(g1, g2).as_dict() == check_main(h1, h2).as_dict()
            assert pack_sequence(g1, g2).status == pack_sequence(h1, h2).status
            assert pack_embed(g1, g2).status == pack_embed(h1, h2).status
            assert match_exceptions(g1, g2) == match_exceptions(h1, h2)


def test_counterexample_pairs_decode():
    rep = verify_theorem("bec-half", 3)
    for a, b in rep.counterexamples + rep.exhausted_instances:
        decode(a), decode(b)


def test_census_counts():
    assert [census(n)["graphs"] for n in range(7)] == [1, 1, 2, 4, 11, 34, 156]
    assert census(4)["connected"] == 6
    assert census(5)["forests"] == 10
