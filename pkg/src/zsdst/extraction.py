"""From raw model responses to normalized dialogue-state updates."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Mapping

from . import resources
from .schema import RequestableLexicon, Schema, SlotDef

REQUESTED = "?"
NONE = "none"
DONTCARE = "dontcare"

SCHEMA_SLOT = "schema"
REQUESTABLE = "requestable"
ALIAS = "alias"
FABRICATED = "fabricated"
RESOLUTION_KINDS = (SCHEMA_SLOT, REQUESTABLE, ALIAS, FABRICATED)

DONTCARE_VARIANTS = frozenset({
    "dontcare", "don't care", "dont care", "do not care", "do n't care", "doesn't matter",
    "does not matter", "any", "anything", "either", "no preference",
})
TIME_SLOT_PARTS = ("leaveat", "arriveby", "book_time")
_SHORT_TIME = re.compile(r"^(\d):([0-5]\d)$")
_FOLD = re.compile(r"[\s_\-]+")

_decoder = json.JSONDecoder()


@dataclass
class RawUpdate:
    pairs: dict[str, str] = field(default_factory=dict)
    fragment_count: int = 0
    empty_indicated: bool = False
    warnings: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class SlotResolution:
    kind: str
    name: str


@dataclass(frozen=True)
class DroppedPair:
    raw_name: str
    raw_value: str
    resolution: SlotResolution
    reason: str


@dataclass
class NormalizedUpdate:
    informable: dict[str, str] = field(default_factory=dict)
    removals: set[str] = field(default_factory=set)
    requested: set[str] = field(default_factory=set)
    dropped: list[DroppedPair] = field(default_factory=list)

    def pair_count(self) -> int:
        return len(self.informable) + len(self.removals) + len(self.requested) + len(self.dropped)


@dataclass(frozen=True)
class NormalizationTables:
    """Orthographic value variants per slot and emptiness phrases."""

    values: Mapping[str, Mapping[str, str]]
    emptiness: tuple[str, ...]

    @classmethod
    def load(cls, values_path=None, emptiness_path=None) -> "NormalizationTables":
        raw = json.loads(Path(values_path or resources.VALUE_NORMALIZATION).read_text(encoding="utf-8"))
        values = {slot.lower(): {k.lower(): v.lower() for k, v in table.items()} for slot, table in raw.items()}
        for slot, table in values.items():
            loops = set(table) & set(table.values())
            if loops:
                raise ValueError(f"value table for {slot!r} maps canonical values again: {sorted(loops)}")
        phrases = tuple(_fold_text(p) for p in resources.read_lines(emptiness_path or resources.EMPTINESS_PHRASES))
        return cls(values, phrases)


@lru_cache(maxsize=None)
def default_tables() -> NormalizationTables:
    return NormalizationTables.load()


def _fold_text(text: str) -> str:
    return " ".join(text.lower().replace('"', " ").replace("'", " ").split())


def _flat_string_map(obj) -> dict[str, str] | None:
    if not isinstance(obj, dict):
        return None
    out = {}
    for k, v in obj.items():
        if isinstance(v, bool) or not isinstance(v, (str, int, float)):
            return None
        out[k] = v if isinstance(v, str) else str(v)
    return out


def extract_json_fragments(text: str) -> list[dict[str, str]]:
    """All top-level JSON objects in ``text`` that are flat maps, in textual order.

    Scans left to right; at each ``{`` tries to decode one object. A decoded object
    (flat or nested) is consumed whole; an undecodable brace is skipped so inner
    objects can still be found.
    """
    out = []
    i = text.find("{")
    while i != -1:
        try:
            obj, end = _decoder.raw_decode(text, i)
        except json.JSONDecodeError:
            i = text.find("{", i + 1)
            continue
        if isinstance(obj, dict):
            flat = _flat_string_map(obj)
            if flat is not None:
                out.append(flat)
        i = text.find("{", end)
    return out


def interpret_response(text: str, fragments: list[dict[str, str]] | None = None,
                       tables: NormalizationTables | None = None) -> RawUpdate:
    if fragments is None:
        fragments = extract_json_fragments(text)
    tables = tables or default_tables()
    pairs: dict[str, str] = {}
    for frag in fragments:
        for k, v in frag.items():
            pairs.pop(k, None)  # later wins, and takes the later position
            pairs[k] = v
    folded = _fold_text(text)
    says_empty = any(p in folded for p in tables.emptiness)
    upd = RawUpdate(pairs, len(fragments))
    if not pairs:
        # an explicit {} is itself an emptiness statement
        upd.empty_indicated = says_empty or bool(fragments)
        if not upd.empty_indicated:
            upd.warnings.append("no JSON object found and no emptiness statement; treated as empty update")
    return upd


def fold_slot_name(name: str) -> str:
    return _FOLD.sub("", name.lower())


def resolve_slot(raw_name: str, schema: Schema, requestables: RequestableLexicon) -> SlotResolution:
    name = raw_name.strip()
    slot = schema.get(name)
    if slot is not None:
        return SlotResolution(SCHEMA_SLOT, slot.name)
    req = requestables.get(name)
    if req is not None:
        return SlotResolution(REQUESTABLE, req)
    folded = fold_slot_name(name)
    for s in schema:
        if fold_slot_name(s.name) == folded:
            return SlotResolution(ALIAS, s.name)
    for r in sorted(requestables.entries):
        if fold_slot_name(r) == folded:
            return SlotResolution(REQUESTABLE, r)
    return SlotResolution(FABRICATED, name)


def is_time_slot(slot_name: str) -> bool:
    return slot_name.split("-", 1)[-1].lower() in TIME_SLOT_PARTS


def normalize_value(slot: SlotDef | str, raw: str, tables: NormalizationTables | None = None) -> str:
    name = slot.name if isinstance(slot, SlotDef) else slot
    value = " ".join(str(raw).strip().lower().split())
    if value == REQUESTED:
        return value
    if value in DONTCARE_VARIANTS:
        return DONTCARE
    if is_time_slot(name):
        m = _SHORT_TIME.match(value)
        if m:
            value = f"0{m.group(1)}:{m.group(2)}"
    table = (tables or default_tables()).values.get(name.lower())
    if table:
        value = table.get(value, value)
    return value


def normalize_update(raw: RawUpdate, schema: Schema, requestables: RequestableLexicon,
                     tables: NormalizationTables | None = None) -> NormalizedUpdate:
    upd = NormalizedUpdate()
    for raw_name, raw_value in raw.pairs.items():
        res = resolve_slot(raw_name, schema, requestables)
        if res.kind in (REQUESTABLE, FABRICATED):
            upd.dropped.append(DroppedPair(raw_name, raw_value, res, f"{res.kind} slot"))
            continue
        slot = schema[res.name]
        if res.name in upd.informable or res.name in upd.removals or res.name in upd.requested:
            # a later alias of the same slot overrides the earlier one
            upd.informable.pop(res.name, None)
            upd.removals.discard(res.name)
            upd.requested.discard(res.name)
        value = normalize_value(slot, raw_value, tables)
        if value == REQUESTED:
            upd.requested.add(res.name)
        elif value in (NONE, ""):
            upd.removals.add(res.name)
        else:
            upd.informable[res.name] = value
    return upd


def prediction_pairs(raw: RawUpdate, schema: Schema, requestables: RequestableLexicon,
                     tables: NormalizationTables | None = None) -> set[tuple[str, str]]:
    """Every predicted (slot, value) of a response, values normalized, hallucinations included."""
    out = set()
    for raw_name, raw_value in raw.pairs.items():
        res = resolve_slot(raw_name, schema, requestables)
        if res.kind in (SCHEMA_SLOT, ALIAS):
            out.add((res.name, normalize_value(schema[res.name], raw_value, tables)))
        else:
            out.add((res.name.lower(), normalize_value(res.name, raw_value, tables)))
    return out
