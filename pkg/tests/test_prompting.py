from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zsdst import resources
from zsdst.prompting import (
    FOLLOWUP,
    INITIAL,
    TURN_SEPARATOR,
    PromptError,
    build_followup_prompt,
    build_initial_prompt,
    build_task_prompt,
    build_turn_message,
    parse_turn_pair,
    turn_pair,
)
from zsdst.schema import Schema, schema_from_json

FIXTURES = Path(__file__).parent / "fixtures"


def test_bundled_schema_renders_reference_prompt(schema):
    expected = resources.REFERENCE_PROMPT.read_text(encoding="utf-8")
    assert build_task_prompt(schema).text == expected


def test_single_slot_prompt_matches_hand_fixture():
    schema = schema_from_json({"slots": {"hotel-area": "area of the hotel"},
                               "categorical": {"hotel-area": ["north", "south"]}})
    expected = (FIXTURES / "single_slot_prompt.txt").read_text(encoding="utf-8")
    assert build_task_prompt(schema).text == expected


def test_prompt_parts(schema):
    prompt = build_task_prompt(schema)
    slots, categorical, task = (prompt.part(i) for i in range(3))
    assert slots.startswith("Consider") and '"slots": {' in slots and slots.endswith("}")
    assert categorical.startswith("Some") and categorical.endswith("}")
    assert task.startswith("Now consider") and task.endswith('"dontcare".')
    assert all(s.name in slots for s in schema)


def test_prompt_is_deterministic(schema):
    assert build_task_prompt(schema) == build_task_prompt(schema)


def test_empty_schema_rejected():
    with pytest.raises(PromptError, match="empty-schema"):
        build_task_prompt(Schema())


def test_first_turn_carries_task_prompt(schema):
    prompt = build_task_prompt(schema)
    msg = build_initial_prompt(prompt, "", "I need a taxi.")
    assert msg.kind == INITIAL and msg.turn_index == 1
    assert msg.text == prompt.text + TURN_SEPARATOR + '"system": ""\n"user": "I need a taxi."'


def test_followups_carry_only_the_pair(schema):
    prompt = build_task_prompt(schema)
    msg = build_turn_message(prompt, "Where to?", "Cambridge.", 3)
    assert msg.kind == FOLLOWUP and msg.text == '"system": "Where to?"\n"user": "Cambridge."'
    with pytest.raises(PromptError):
        build_followup_prompt("a", "b", 1)


@given(st.text(), st.text())
def test_turn_pair_round_trip(system, user):
    assert parse_turn_pair(turn_pair(system, user)) == (system, user)


@given(st.text(), st.text())
def test_turn_pair_is_two_lines(system, user):
    assert turn_pair(system, user).count("\n") == 1
