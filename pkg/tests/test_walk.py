import json
import random

import pytest
from hypothesis import given

from conftest import ideals_plus_P
from lexplus.betti import betti_dominates, graded_betti
from lexplus.fuzz import FuzzConfig, exhaustive_corpus, fuzz_campaign, random_ideal_plus_P
from lexplus.hilbert import hf_equal
from lexplus.ideal import MonomialIdeal
from lexplus.monomial import Field, Ordering, PowerSequence
from lexplus.transforms import is_borel_plus_P, plus_P
from lexplus.walk import borelify_plus_P, default_cap, lex_plus_P, lpp_verify

P3 = PowerSequence(3, (2, 2, 2))


def M(n, *gens):
    return MonomialIdeal(n, gens)


def with_P(P, *gens):
    return plus_P(MonomialIdeal(P.n, gens), P)


def test_worked_example():
    I = with_P(P3, (0, 1, 1))
    B, trace = borelify_plus_P(I, P3, check_betti=True)
    assert B == with_P(P3, (1, 1, 0))
    assert trace.steps[0].kind == "initial-shift"
    assert trace.steps[0].after == with_P(P3, (1, 0, 1))
    assert [s.kind for s in trace.steps if s.changed] == ["initial-shift", "initial-shift"]
    assert trace.changing_steps == 2
    rep = lpp_verify(I, P3, walk=True)
    assert rep.passed
    assert rep.lex_plus_P == B
    assert rep.betti_ideal == rep.betti_lex
    assert rep.cancellation == {}


def test_borel_plus_P_is_fixed():
    B = with_P(P3, (1, 1, 0))
    out, trace = borelify_plus_P(B, P3)
    assert out == B
    assert trace.step_count == 0


def test_lex_plus_P_input():
    L = with_P(P3, (1, 1, 0), (1, 0, 1))
    rep = lpp_verify(L, P3)
    assert rep.passed and rep.lex_plus_P == L and rep.cancellation == {}
    rep = lpp_verify(MonomialIdeal.from_powers(P3), P3)
    assert rep.passed and rep.cancellation == {}


def test_requires_P():
    with pytest.raises(ValueError):
        borelify_plus_P(M(3, (0, 1, 1)), P3)
    with pytest.raises(ValueError):
        lpp_verify(M(3, (0, 1, 1)), P3)


def test_default_cap():
    assert default_cap(with_P(P3, (1, 1, 1)), P3) == 3 + 6 + 2


def test_lex_plus_P_is_certified():
    I = with_P(P3, (0, 1, 1))
    L, hf = lex_plus_P(I, P3)
    assert hf_equal(L, I)
    assert hf.cap == default_cap(I, P3)


def test_nontrivial_cancellation():
    # P + (x3) with P = (x1^2, x2^2, x3^3): the lex-plus-P ideal carries two extra Betti numbers
    P = PowerSequence(3, (2, 2, 3))
    rep = lpp_verify(with_P(P, (0, 0, 1)), P)
    assert rep.lex_plus_P == with_P(P, (1, 0, 0), (0, 1, 1))
    assert rep.passed and rep.cancellation == {(0, 3): 1, (1, 4): 1}
    rng = random.Random(7)
    found = False
    for _ in range(200):
        I = random_ideal_plus_P(rng, P, 3, 3)
        rep = lpp_verify(I, P)
        assert rep.passed
        if any(rep.cancellation.values()):
            found = True
            for (i, j), c in rep.cancellation.items():
                assert c > 0
            for (i, j) in set(rep.betti_lex.entries) | set(rep.betti_ideal.entries):
                c = rep.cancellation.get((i, j), 0) + rep.cancellation.get((i - 1, j), 0)
                assert rep.betti_ideal[i, j] == rep.betti_lex[i, j] - c
    assert found


@given(ideals_plus_P())
def test_walk_properties(IP):
    I, P = IP
    B, trace = borelify_plus_P(I, P, check_betti=True)
    assert is_borel_plus_P(B, P)
    assert hf_equal(B, I)
    for s in trace.steps:
        assert s.hf_equal
        assert s.betti_dominates
        if s.changed:
            assert s.revlex is Ordering.GREATER
    assert trace.outcome == B
    assert betti_dominates(graded_betti(B), graded_betti(I))


@given(ideals_plus_P())
def test_lpp_properties(IP):
    I, P = IP
    for p in (0, 2):
        rep = lpp_verify(I, P, Field(p))
        assert rep.passed, rep.to_json()


def test_non_artinian_powers():
    P = PowerSequence(3, (2, 3))
    I = with_P(P, (0, 1, 1), (0, 0, 3))
    rep = lpp_verify(I, P, walk=True, check_betti=True)
    assert rep.passed


def test_report_json_is_deterministic():
    I = with_P(P3, (0, 1, 1))
    a = lpp_verify(I, P3, walk=True).to_json(timing=False)
    b = lpp_verify(I, P3, walk=True).to_json(timing=False)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert "wall_time_s" not in json.dumps(a)
    assert "wall_time_s" in json.dumps(lpp_verify(I, P3, walk=True).to_json(timing=True))


def test_failure_report_mentions_counterexample():
    I = with_P(P3, (0, 1, 1))
    rep = lpp_verify(I, P3)
    rep.dominates = False
    doc = rep.to_json()
    assert doc["pass"] is False and "counterexample" in doc["note"]


def test_exhaustive_corpus_size():
    corpus = exhaustive_corpus(P3, 3)
    assert len(corpus) == len(set(corpus))
    assert MonomialIdeal.from_powers(P3) in corpus
    assert all(J.contains_ideal(MonomialIdeal.from_powers(P3)) for J in corpus)


def test_fuzz_campaign_examples():
    cfg = FuzzConfig(3, (2, 2, 2), 100, seed=42)
    r = fuzz_campaign(cfg)
    assert (r["passed"], r["failed"]) == (100, 0)
    assert fuzz_campaign(FuzzConfig(3, (2, 2, 2), 0))["results"] == []
    small = FuzzConfig(3, (2, 2, 2), 15, seed=3, chars=(0, 2))
    assert json.dumps(fuzz_campaign(small), sort_keys=True) == json.dumps(fuzz_campaign(small, jobs=2), sort_keys=True)
    with pytest.raises(ValueError):
        fuzz_campaign(FuzzConfig(1, (2,), 3))
