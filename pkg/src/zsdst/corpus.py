"""Dialogue corpus with gold states, derived gold updates and value-type labels.

Corpus file layout::

    {"dialogues": [{"id": ..., "domains": [...],
                    "turns": [{"system": ..., "user": ..., "state": {slot: value},
                               "requested": [slot, ...]}]}]}

``requested`` (gold user-requested slots) is optional. ``update`` may be given
per turn; otherwise it is derived from consecutive states.
"""
from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Mapping

from .schema import BOOLEAN, Schema
from .variants import VariantMap, default_variants

NONE = "none"
DONTCARE = "dontcare"

EXTRACT = "extract"
INFORM = "inform"
REFER = "refer"
BOOLEAN_TYPE = "boolean"
DONTCARE_TYPE = "dontcare"
NONE_TYPE = "none"
VALUE_TYPES = (EXTRACT, INFORM, REFER, BOOLEAN_TYPE, DONTCARE_TYPE, NONE_TYPE)


class CorpusError(ValueError):
    pass


class CorpusWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Turn:
    index: int
    system_utterance: str
    user_utterance: str
    gold_state: Mapping[str, str]
    gold_update: Mapping[str, str] | None = None
    requested: tuple[str, ...] = ()
    note: str | None = None


@dataclass(frozen=True)
class Dialogue:
    id: str
    domains: frozenset[str]
    turns: tuple[Turn, ...]
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def turn(self, t: int) -> Turn:
        return self.turns[t - 1]

    def prev_state(self, t: int) -> Mapping[str, str]:
        return self.turns[t - 2].gold_state if t >= 2 else {}


def state_difference(prev: Mapping[str, str], cur: Mapping[str, str]) -> dict[str, str]:
    """Key-wise update taking ``prev`` to ``cur``; deletions carry the value ``"none"``."""
    update = {k: v for k, v in cur.items() if prev.get(k) != v}
    for k in prev:
        if k not in cur:
            update[k] = NONE
    return update


def derive_gold_updates(dialogue: Dialogue) -> Dialogue:
    turns = []
    notes = []
    prev: Mapping[str, str] = {}
    for turn in dialogue.turns:
        update = state_difference(prev, turn.gold_state)
        dropped = sorted(k for k, v in update.items() if v == NONE and k in prev)
        if dropped:
            notes.append(f"{dialogue.id} turn {turn.index}: gold state drops {', '.join(dropped)}")
        turns.append(replace(turn, gold_update=update))
        prev = turn.gold_state
    return replace(dialogue, turns=tuple(turns), warnings=tuple(notes))


def dialogue_from_json(obj: Mapping) -> Dialogue:
    did = obj["id"]
    turns = []
    for i, raw in enumerate(obj["turns"], start=1):
        index = raw.get("index", i)
        if index != i:
            raise CorpusError(f"{did}: turn indices must be contiguous from 1 (got {index} at position {i})")
        turns.append(Turn(
            index=i,
            system_utterance=raw.get("system", ""),
            user_utterance=raw.get("user", ""),
            gold_state=dict(raw.get("state", {})),
            gold_update=dict(raw["update"]) if "update" in raw else None,
            requested=tuple(raw.get("requested", ())),
            note=raw.get("note"),
        ))
    state_domains = {k.split("-", 1)[0] for t in turns for k in t.gold_state}
    domains = frozenset(obj.get("domains", ())) | state_domains
    dialogue = Dialogue(did, domains, tuple(turns))
    if any(t.gold_update is None for t in turns):
        dialogue = derive_gold_updates(dialogue)
        for msg in dialogue.warnings:
            warnings.warn(msg, CorpusWarning, stacklevel=3)
    return dialogue


def dialogue_to_json(dialogue: Dialogue) -> dict:
    turns = []
    for t in dialogue.turns:
        rec = {"system": t.system_utterance, "user": t.user_utterance, "state": dict(t.gold_state)}
        if t.requested:
            rec["requested"] = list(t.requested)
        if t.note:
            rec["note"] = t.note
        turns.append(rec)
    return {"id": dialogue.id, "domains": sorted(dialogue.domains), "turns": turns}


def load_corpus(path) -> list[Dialogue]:
    path = Path(path)
    if not path.is_file():
        raise CorpusError(f"corpus file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CorpusError(f"malformed corpus JSON in {path}: {exc}") from exc
    dialogues = [dialogue_from_json(d) for d in data["dialogues"]]
    ids = [d.id for d in dialogues]
    if len(set(ids)) != len(ids):
        raise CorpusError(f"duplicate dialogue ids in {path}")
    return dialogues


def dump_corpus(dialogues: Iterable[Dialogue], path) -> None:
    data = {"dialogues": [dialogue_to_json(d) for d in dialogues]}
    Path(path).write_text(json.dumps(data, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")


def _mentions(text: str, forms: Iterable[str]) -> bool:
    text = text.lower()
    return any(re.search(r"(?<!\w)" + re.escape(f) + r"(?!\w)", text) for f in forms if f)


def value_type(slot: str, value: str, *, kind: str | None, system: str, user: str,
               prior: Mapping[str, str], variants: VariantMap) -> str:
    """Bucket one slot assignment. Precedence: none, dontcare, boolean, inform, refer, extract."""
    if value == NONE:
        return NONE_TYPE
    if value == DONTCARE:
        return DONTCARE_TYPE
    if kind == BOOLEAN:
        return BOOLEAN_TYPE
    forms = variants.variants(slot, value)
    in_user = _mentions(user, forms)
    if not in_user and _mentions(system, forms):
        return INFORM
    if not in_user and any(s != slot and variants.equivalent(slot, v, value) for s, v in prior.items()):
        return REFER
    return EXTRACT


def classify_gold_value_type(dialogue: Dialogue, t: int, slot: str, schema: Schema | None = None,
                             variants: VariantMap | None = None) -> str:
    turn = dialogue.turn(t)
    if turn.gold_update is None or slot not in turn.gold_update:
        raise KeyError(f"{slot!r} is not in the gold update of {dialogue.id} turn {t}")
    slot_def = schema.get(slot) if schema is not None else None
    return value_type(
        slot, turn.gold_update[slot],
        kind=slot_def.kind if slot_def else None,
        system=turn.system_utterance, user=turn.user_utterance,
        prior=dialogue.prev_state(t),
        variants=variants or default_variants(),
    )


# upstream MultiWOZ 2.1 data.json conversion

_UPSTREAM_DOMAINS = ("taxi", "restaurant", "hotel", "attraction", "train")
_EMPTY_VALUES = {"", "not mentioned", "none"}
_DONTCARE_VALUES = {"dont care", "don't care", "do n't care", "dontcare", "do nt care"}


def _clean_upstream_value(value) -> str | None:
    if isinstance(value, list):
        value = value[0] if value else ""
    value = " ".join(str(value).strip().lower().split())
    if value in _EMPTY_VALUES:
        return None
    if value in _DONTCARE_VALUES:
        return DONTCARE
    return value


def _upstream_state(metadata: Mapping) -> dict[str, str]:
    state = {}
    for domain in _UPSTREAM_DOMAINS:
        frame = metadata.get(domain)
        if not frame:
            continue
        for name, value in frame.get("semi", {}).items():
            v = _clean_upstream_value(value)
            if v is not None:
                state[f"{domain}-{name}"] = v
        for name, value in frame.get("book", {}).items():
            if name == "booked":
                continue
            v = _clean_upstream_value(value)
            if v is not None:
                state[f"{domain}-book_{name}"] = v
    return state


def convert_multiwoz(data: Mapping, ids: Iterable[str] | None = None) -> list[Dialogue]:
    """Convert upstream ``{"PMUL4050.json": {"goal", "log"}}`` data into dialogues.

    The belief state annotated on system turn ``2t-1`` is the gold state after user turn ``t``.
    """
    wanted = None if ids is None else set(ids)
    out = []
    for key, dial in data.items():
        did = key[:-5] if key.endswith(".json") else key
        if wanted is not None and did not in wanted:
            continue
        log = dial["log"]
        turns = []
        for t in range(len(log) // 2):
            user = log[2 * t]["text"]
            system = log[2 * t - 1]["text"] if t > 0 else ""
            state = _upstream_state(log[2 * t + 1].get("metadata", {}))
            turns.append({"system": system, "user": user, "state": state})
        goal = dial.get("goal", {})
        domains = [d for d in _UPSTREAM_DOMAINS if goal.get(d)]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", CorpusWarning)
            out.append(dialogue_from_json({"id": did, "domains": domains, "turns": turns}))
    return out
