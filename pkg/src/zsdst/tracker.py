"""Cumulative state tracking and per-dialogue runs."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .backend import BackendError, ChatSession, TranscriptEntry, TranscriptStore
from .corpus import NONE, Dialogue
from .extraction import (
    REQUESTED,
    DroppedPair,
    NormalizationTables,
    NormalizedUpdate,
    RawUpdate,
    SlotResolution,
    extract_json_fragments,
    interpret_response,
    normalize_update,
)
from .prompting import TaskPrompt, TurnMessage, build_task_prompt, build_turn_message
from .schema import RequestableLexicon, Schema

DialogueState = dict  # schema slot -> canonical value


def apply_update(prev: Mapping[str, str], upd: NormalizedUpdate) -> dict[str, str]:
    state = dict(prev)
    for slot in upd.removals:
        state.pop(slot, None)
    state.update(upd.informable)
    return state




def _mentioned(value: str, text: str) -> bool:
    return re.search(r"(?<!\w)" + re.escape(value) + r"(?!\w)", text.lower()) is not None


def detect_full_state_prediction(prev: Mapping[str, str], update: Mapping[str, str], user: str = "") -> bool:
    """True when an update restates the whole previous state instead of a change set.

    ``update`` maps resolved slot names to normalized values. Every tracked slot must
    reappear, and at least one with its value unchanged although the user did not
    say it again this turn.
    """
    if not prev:
        return False
    if not all(slot in update for slot in prev):
        return False
    return any(update[slot] == value and not _mentioned(value, user) for slot, value in prev.items())


@dataclass
class TurnRecord:
    message: TurnMessage
    response: str
    raw: RawUpdate
    update: NormalizedUpdate
    state: dict[str, str]
    full_state: bool = False

    @property
    def turn(self) -> int:
        return self.message.turn_index


@dataclass
class Trace:
    dialogue_id: str
    records: list[TurnRecord] = field(default_factory=list)
    model_id: str = ""
    complete: bool = True
    error: str | None = None

    def final_state(self) -> dict[str, str]:
        return dict(self.records[-1].state) if self.records else {}

    def states(self) -> list[dict[str, str]]:
        return [r.state for r in self.records]

    # serialization: one JSON line per turn, plus a trailing status line when incomplete

    def to_lines(self) -> list[str]:
        lines = [json.dumps(_record_to_json(self.dialogue_id, self.model_id, r), ensure_ascii=False)
                 for r in self.records]
        if not self.complete:
            lines.append(json.dumps({"dialogue_id": self.dialogue_id, "complete": False, "error": self.error},
                                    ensure_ascii=False))
        return lines

    def dump(self, path) -> None:
        Path(path).write_text("".join(line + "\n" for line in self.to_lines()), encoding="utf-8")

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "Trace":
        trace = None
        for line in lines:
            if not line.strip():
                continue
            obj = json.loads(line)
            if trace is None:
                trace = cls(obj["dialogue_id"], model_id=obj.get("model_id", ""))
            if obj.get("complete") is False:
                trace.complete = False
                trace.error = obj.get("error")
                continue
            trace.records.append(_record_from_json(obj))
        if trace is None:
            raise ValueError("empty trace")
        return trace

    @classmethod
    def load(cls, path) -> "Trace":
        return cls.from_lines(Path(path).read_text(encoding="utf-8").splitlines())


def _record_to_json(dialogue_id: str, model_id: str, r: TurnRecord) -> dict:
    return {
        "dialogue_id": dialogue_id,
        "turn": r.turn,
        "kind": r.message.kind,
        "prompt": r.message.text,
        "response": r.response,
        "raw": {"pairs": r.raw.pairs, "fragment_count": r.raw.fragment_count,
                "empty_indicated": r.raw.empty_indicated},
        "update": {
            "informable": dict(sorted(r.update.informable.items())),
            "removals": sorted(r.update.removals),
            "requested": sorted(r.update.requested),
            "dropped": [{"name": d.raw_name, "value": d.raw_value, "resolution": d.resolution.kind,
                         "resolved": d.resolution.name, "reason": d.reason} for d in r.update.dropped],
        },
        "state": dict(sorted(r.state.items())),
        "full_state": r.full_state,
        "warnings": list(r.raw.warnings),
        "model_id": model_id,
    }


def _record_from_json(obj: Mapping) -> TurnRecord:
    raw = RawUpdate(dict(obj["raw"]["pairs"]), obj["raw"]["fragment_count"], obj["raw"]["empty_indicated"],
                    list(obj.get("warnings", ())))
    u = obj["update"]
    update = NormalizedUpdate(
        informable=dict(u["informable"]),
        removals=set(u["removals"]),
        requested=set(u["requested"]),
        dropped=[DroppedPair(d["name"], d["value"], SlotResolution(d["resolution"], d["resolved"]), d["reason"])
                 for d in u["dropped"]],
    )
    message = TurnMessage(obj["prompt"], obj["turn"], obj["kind"])
    return TurnRecord(message, obj["response"], raw, update, dict(obj["state"]), obj["full_state"])


def process_response(text: str, prev: Mapping[str, str], schema: Schema, requestables: RequestableLexicon,
                     tables: NormalizationTables | None = None,
                     user: str = "") -> tuple[RawUpdate, NormalizedUpdate, dict, bool]:
    raw = interpret_response(text, extract_json_fragments(text), tables)
    update = normalize_update(raw, schema, requestables, tables)
    restated = {**update.informable, **{s: REQUESTED for s in update.requested},
                **{s: NONE for s in update.removals}}
    full = detect_full_state_prediction(prev, restated, user)
    return raw, update, apply_update(prev, update), full


def run_dialogue(session: ChatSession, schema: Schema, requestables: RequestableLexicon, dialogue: Dialogue,
                 task_prompt: TaskPrompt | None = None, tables: NormalizationTables | None = None) -> Trace:
    """One pass over the dialogue in a single chat; backend failures yield an incomplete trace."""
    if session.sends:
        raise ValueError("run_dialogue needs a fresh session")
    prompt = task_prompt or build_task_prompt(schema)
    trace = Trace(dialogue.id, model_id=session.model_id)
    state: dict[str, str] = {}
    for turn in dialogue.turns:
        message = build_turn_message(prompt, turn.system_utterance, turn.user_utterance, turn.index)
        try:
            response = session.send(message)
        except BackendError as exc:
            trace.complete = False
            trace.error = f"turn {turn.index}: {exc}"
            break
        raw, update, state, full = process_response(response, state, schema, requestables, tables,
                                                    turn.user_utterance)
        trace.records.append(TurnRecord(message, response, raw, update, state, full))
    return trace


def gold_response(update: Mapping[str, str]) -> str:
    return json.dumps(dict(update), ensure_ascii=False, indent=1)


def gold_transcripts(dialogues: Iterable[Dialogue], schema: Schema, model_id: str = "gold") -> TranscriptStore:
    """A replay store whose responses are the gold updates, for identity checks."""
    prompt = build_task_prompt(schema)
    store = TranscriptStore()
    for d in dialogues:
        for turn in d.turns:
            msg = build_turn_message(prompt, turn.system_utterance, turn.user_utterance, turn.index)
            store.add(TranscriptEntry(d.id, turn.index, msg.text, gold_response(turn.gold_update or {}), model_id))
    return store
