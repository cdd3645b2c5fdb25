import json
import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import VARIANT_GROUPS, corrupt_states, jga_oracle, make_trace, random_corpus
from zsdst import resources
from zsdst.backend import ReplayBackend
from zsdst.corpus import VALUE_TYPES, Dialogue, Turn, state_difference
from zsdst.evaluation import (
    RESTRICT_ALL,
    RESTRICT_FILTER,
    EvalError,
    joint_goal_accuracy,
    per_domain_jga,
    per_type_metrics,
    render_comparison,
    values_match,
)
from zsdst.tracker import gold_transcripts, run_dialogue

HAND = json.loads((Path(__file__).parent / "fixtures" / "hand_counts.json").read_text(encoding="utf-8"))


def dialogue(did, states, domains=("hotel",)):
    turns, prev = [], {}
    for i, s in enumerate(states, start=1):
        turns.append(Turn(i, "", "", dict(s), state_difference(prev, s)))
        prev = s
    return Dialogue(did, frozenset(domains), tuple(turns))


@pytest.mark.parametrize("slot, pred, gold, expected", [
    ("hotel-type", "guest house", "guest house", True),
    ("hotel-type", "guesthouse", "guest house", True),
    ("restaurant-pricerange", "high-end", "expensive", False),
    ("train-day", "saturday", "saturday", True),
    ("hotel-name", None, None, True),
    ("hotel-name", "x", None, False),
    ("hotel-name", None, "x", False),
])
def test_values_match(slot, pred, gold, expected):
    assert values_match(slot, pred, gold) is expected


value_strategy = st.one_of(st.none(), st.sampled_from([v for g in VARIANT_GROUPS.get("hotel-type", []) for v in g]),
                           st.text(max_size=6))


@given(value_strategy, value_strategy)
def test_values_match_is_symmetric(a, b):
    assert values_match("hotel-type", a, b) == values_match("hotel-type", b, a)


def test_cumulative_example():
    gold = [{"hotel-area": "north"}, {"hotel-area": "north", "hotel-stars": "4"},
            {"hotel-area": "north", "hotel-stars": "4"}, {"hotel-area": "north", "hotel-stars": "4",
                                                          "hotel-parking": "yes"}]
    # one early miss spoils every later turn unless repaired
    pred = [{"hotel-area": "north"}, {"hotel-area": "north"}, {"hotel-area": "north"},
            {"hotel-area": "north", "hotel-parking": "yes"}]
    d = dialogue("X", gold)
    assert joint_goal_accuracy([make_trace("X", pred)], [d]).jga == pytest.approx(0.25)


def test_fixture_jga_matches_oracle_and_hand_count(fixture_traces, corpus, schema):
    metrics = joint_goal_accuracy(fixture_traces, corpus, schema=schema)
    states = {t.dialogue_id: t.states() for t in fixture_traces}
    hand = Fraction(sum(sum(v) for v in HAND["turn_correct"].values()),
                    sum(len(v) for v in HAND["turn_correct"].values()))
    assert hand == jga_oracle(states, corpus, schema.names) == Fraction(8, 33)
    assert metrics.jga == pytest.approx(float(hand))
    assert metrics.turn_count == 33 and metrics.dialogue_count == 9
    for dom in schema.domains:
        for protocol in (RESTRICT_FILTER, RESTRICT_ALL):
            expected = jga_oracle(states, corpus, schema.names, dom, protocol)
            got = per_domain_jga(fixture_traces, corpus, domain=dom, schema=schema, protocol=protocol)
            assert got == pytest.approx(float(expected))


def test_protocols_differ_on_fixture(fixture_traces, corpus, schema):
    filt = joint_goal_accuracy(fixture_traces, corpus, schema=schema, protocol=RESTRICT_FILTER)
    every = joint_goal_accuracy(fixture_traces, corpus, schema=schema, protocol=RESTRICT_ALL)
    assert filt.per_domain_protocol == RESTRICT_FILTER and every.per_domain_protocol == RESTRICT_ALL
    assert filt.per_domain_jga != every.per_domain_jga


def test_single_domain_per_domain_equals_jga(schema):
    d = dialogue("S", [{"hotel-area": "north"}, {"hotel-area": "north", "hotel-stars": "4"}])
    trace = make_trace("S", [{"hotel-area": "north"}, {"hotel-area": "south"}])
    m = joint_goal_accuracy([trace], [d], schema=schema)
    assert m.per_domain_jga["hotel"] == m.jga == 0.5


def test_errors_in_one_domain_leave_the_other_perfect(schema):
    gold = [{"hotel-area": "north"}, {"hotel-area": "north", "train-day": "friday"},
            {"hotel-area": "north", "train-day": "friday", "hotel-stars": "3"}]
    pred = [{"hotel-area": "east"}, {"hotel-area": "east", "train-day": "friday"},
            {"train-day": "friday", "hotel-stars": "3"}]
    d = dialogue("M", gold, ("hotel", "train"))
    m = joint_goal_accuracy([make_trace("M", pred)], [d], schema=schema)
    assert m.per_domain_jga["train"] == 1.0 and m.per_domain_jga["hotel"] == 0.0 and m.jga == 0.0
    assert m.per_domain_jga["taxi"] is None
    every = joint_goal_accuracy([make_trace("M", pred)], [d], schema=schema, protocol=RESTRICT_ALL)
    assert every.per_domain_jga["taxi"] == 1.0


def test_unknown_domain_and_protocol(fixture_traces, corpus, schema):
    with pytest.raises(EvalError, match="domain"):
        per_domain_jga(fixture_traces, corpus, domain="police", schema=schema)
    with pytest.raises(EvalError, match="protocol"):
        per_domain_jga(fixture_traces, corpus, domain="hotel", schema=schema, protocol="sometimes")


def test_mismatched_traces_are_rejected(fixture_traces, corpus):
    short = make_trace("PMUL4050", [{}])
    with pytest.raises(EvalError, match="turns"):
        joint_goal_accuracy([short], corpus)
    with pytest.raises(EvalError, match="no corpus"):
        joint_goal_accuracy([make_trace("NOPE", [{}])], corpus)


def test_more_corruption_never_raises_jga(corpus, schema):
    rng = random.Random(7)
    turns = [(d.id, i) for d in corpus for i in range(len(d.turns))]
    rng.shuffle(turns)
    previous = 1.0
    for k in range(0, len(turns) + 4, 4):
        broken = set(turns[:k])
        traces = []
        for d in corpus:
            states = [dict(t.gold_state, **({"hotel-name": "nowhere"} if (d.id, i) in broken else {}))
                      for i, t in enumerate(d.turns)]
            traces.append(make_trace(d.id, states))
        jga = joint_goal_accuracy(traces, corpus, schema=schema).jga
        assert jga <= previous
        previous = jga
    assert previous == 0.0


def test_sng01873_dontcare_false_positives(fixture_traces, corpus, schema):
    trace = [t for t in fixture_traces if t.dialogue_id == "SNG01873"]
    d = [d for d in corpus if d.id == "SNG01873"]
    _, confusion = per_type_metrics(trace, d, schema=schema)
    assert confusion["gold_other"]["pred_dontcare"] >= 20


def test_dontcare_confusion_equals_hand_count(fixture_traces, corpus, schema):
    m = joint_goal_accuracy(fixture_traces, corpus, schema=schema)
    assert m.dontcare_confusion == HAND["dontcare_confusion"]
    for did, cells in HAND["dontcare_cells_by_dialogue"].items():
        _, conf = per_type_metrics([t for t in fixture_traces if t.dialogue_id == did],
                                   [d for d in corpus if d.id == did], schema=schema)
        assert conf["gold_dontcare"]["pred_dontcare"] + conf["gold_other"]["pred_dontcare"] == cells


def test_gold_replay_scores_perfectly(all_dialogues, schema, requestables):
    backend = ReplayBackend(gold_transcripts(all_dialogues, schema))
    traces = [run_dialogue(backend.open_session(d.id), schema, requestables, d) for d in all_dialogues]
    m = joint_goal_accuracy(traces, all_dialogues, schema=schema)
    assert m.jga == 1.0
    assert all(v in (None, 1.0) for v in m.per_domain_jga.values())
    for vtype in VALUE_TYPES:
        score = m.per_type[vtype]
        if score.support:
            assert score.recall == 1.0, vtype
        if score.predicted:
            assert score.precision == 1.0, vtype
    assert m.dontcare_confusion["gold_dontcare"]["pred_other"] == 0
    assert m.dontcare_confusion["gold_other"]["pred_dontcare"] == 0


def test_render_with_references(fixture_traces, corpus, schema):
    m = joint_goal_accuracy(fixture_traces, corpus, schema=schema)
    text = render_comparison(m, resources.REFERENCE_NUMBERS)
    assert "56.44" in text and "31.5" in text and "(reference)" in text
    assert "24.2" in text
    first_row = [line for line in text.splitlines() if line.startswith("| this run")][0]
    assert first_row.count("|") == 8


def test_render_without_references(fixture_traces, corpus, schema, tmp_path):
    m = joint_goal_accuracy(fixture_traces, corpus, schema=schema)
    text = render_comparison(m, tmp_path / "missing.json")
    assert "(reference)" not in text and "this run" in text


def test_render_csv(fixture_traces, corpus, schema):
    m = joint_goal_accuracy(fixture_traces, corpus, schema=schema)
    rows = render_comparison(m, resources.REFERENCE_NUMBERS, fmt="csv").splitlines()
    assert rows[0] == "Models,attr.,hotel,rest.,taxi,train,avg."
    assert len(rows) == 1 + 1 + 8
    with pytest.raises(ValueError):
        render_comparison(m, fmt="xml")


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_random_corpora_agree_with_oracle(schema, seed):
    rng = random.Random(seed)
    corpus = random_corpus(rng, schema, rng.randint(1, 12), 8)
    states = {d.id: corrupt_states(rng, d, schema, rng.random()) for d in corpus}
    traces = [make_trace(d.id, states[d.id]) for d in corpus]
    for protocol in (RESTRICT_FILTER, RESTRICT_ALL):
        m = joint_goal_accuracy(traces, corpus, schema=schema, protocol=protocol)
        assert m.jga == pytest.approx(float(jga_oracle(states, corpus, schema.names)))
        for dom in schema.domains:
            expected = jga_oracle(states, corpus, schema.names, dom, protocol)
            got = m.per_domain_jga[dom]
            assert (got is None) if expected is None else got == pytest.approx(float(expected))
