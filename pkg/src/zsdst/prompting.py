"""Task prompt and per-turn chat messages."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from string import Template

from . import resources
from .schema import Schema

INITIAL = "initial"
FOLLOWUP = "followup"

TURN_SEPARATOR = "\n\n"


class PromptError(ValueError):
    pass


@dataclass(frozen=True)
class TaskPrompt:
    text: str
    # (start, end) character offsets of slot list, categorical list, task description
    part_offsets: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]

    def part(self, i: int) -> str:
        start, end = self.part_offsets[i]
        return self.text[start:end]


@dataclass(frozen=True)
class TurnMessage:
    text: str
    turn_index: int
    kind: str


@lru_cache(maxsize=None)
def _load_template(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _entries(pairs) -> str:
    lines = [f"    {json.dumps(k, ensure_ascii=False)}: {v}" for k, v in pairs]
    return ",\n".join(lines) + "\n" if lines else ""


def build_task_prompt(schema: Schema, template_path=None) -> TaskPrompt:
    if not len(schema):
        raise PromptError("empty-schema: a prompt without slots cannot define the tracking task")
    template = _load_template(str(template_path or resources.PROMPT_TEMPLATE))
    slot_entries = _entries((s.name, json.dumps(s.description, ensure_ascii=False)) for s in schema)
    cat_entries = _entries((s.name, json.dumps(list(s.candidates), ensure_ascii=False))
                           for s in schema.categorical_slots)
    text = Template(template).substitute(slot_entries=slot_entries, categorical_entries=cat_entries)

    # part boundaries: the three blocks are separated by blank lines after each closing brace
    slots_start = 0
    cat_intro = text.index("\n\n", text.index("\n}", text.index('"slots": {'))) + 2
    cat_end = text.index("\n}", text.index('"categorical"')) + 2
    task_start = cat_end + 2
    offsets = ((slots_start, cat_intro - 2), (cat_intro, cat_end), (task_start, len(text)))
    return TaskPrompt(text, offsets)


def turn_pair(system: str, user: str) -> str:
    """Render one exchange as two quoted lines; JSON escaping keeps the framing unambiguous."""
    return (f'"system": {json.dumps(system, ensure_ascii=False)}\n'
            f'"user": {json.dumps(user, ensure_ascii=False)}')


def build_initial_prompt(prompt: TaskPrompt, system: str, user: str) -> TurnMessage:
    return TurnMessage(prompt.text + TURN_SEPARATOR + turn_pair(system, user), 1, INITIAL)


def build_followup_prompt(system: str, user: str, t: int) -> TurnMessage:
    if t < 2:
        raise PromptError(f"follow-up messages start at turn 2, got {t}")
    return TurnMessage(turn_pair(system, user), t, FOLLOWUP)


def build_turn_message(prompt: TaskPrompt, system: str, user: str, t: int) -> TurnMessage:
    if t == 1:
        return build_initial_prompt(prompt, system, user)
    return build_followup_prompt(system, user, t)


def parse_turn_pair(text: str) -> tuple[str, str]:
    """Recover (system, user) from the last two lines of a rendered message."""
    sys_line, user_line = text.rsplit("\n", 2)[-2:]
    return (json.loads(sys_line.removeprefix('"system": ')),
            json.loads(user_line.removeprefix('"user": ')))
