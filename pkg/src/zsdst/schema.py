"""Slot ontology: loading, validation and lookup.

The schema file mirrors the JSON fragments embedded in the task prompt::

    {"slots": {name: description}, "categorical": {name: [candidates]}}

Slot kinds are inferred: a categorical entry with candidates ``["yes", "no"]``
is boolean, any other categorical entry is categorical, everything else is open.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

OPEN = "open"
CATEGORICAL = "categorical"
BOOLEAN = "boolean"

BOOLEAN_CANDIDATES = ("yes", "no")


class SchemaError(ValueError):
    """Raised when a schema or lexicon file cannot be loaded."""


@dataclass(frozen=True)
class SlotDef:
    name: str
    description: str
    kind: str = OPEN
    candidates: tuple[str, ...] = ()

    @property
    def domain(self) -> str:
        return self.name.split("-", 1)[0]

    @property
    def slot_part(self) -> str:
        return self.name.split("-", 1)[-1]


@dataclass(frozen=True)
class Violation:
    slot: str
    rule: str
    message: str = ""


@dataclass(frozen=True)
class Schema:
    """Ordered slot definitions. ``categorical_order`` keeps the file order of the
    candidate block, which need not follow the slot order; empty means slot order."""

    slots: tuple[SlotDef, ...] = ()
    categorical_order: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "_by_name", {s.name: s for s in self.slots})
        object.__setattr__(self, "_by_lower", {s.name.lower(): s for s in self.slots})

    @property
    def categorical_slots(self) -> list[SlotDef]:
        restricted = [s for s in self.slots if s.kind != OPEN]
        if not self.categorical_order:
            return restricted
        rank = {name: i for i, name in enumerate(self.categorical_order)}
        return sorted(restricted, key=lambda s: rank.get(s.name, len(rank)))

    @property
    def names(self) -> list[str]:
        return [s.name for s in self.slots]

    @property
    def domains(self) -> set[str]:
        return {s.domain for s in self.slots}

    def __len__(self) -> int:
        return len(self.slots)

    def __iter__(self):
        return iter(self.slots)

    def __contains__(self, name: str) -> bool:
        return self.get(name) is not None

    def __getitem__(self, name: str) -> SlotDef:
        slot = self.get(name)
        if slot is None:
            raise KeyError(name)
        return slot

    def get(self, name: str) -> SlotDef | None:
        """Case-insensitive lookup; stored names keep their file casing."""
        return self._by_name.get(name) or self._by_lower.get(name.lower())

    def domain_slots(self, domain: str) -> list[str]:
        return [s.name for s in self.slots if s.domain == domain]

    def to_json(self) -> dict:
        return {
            "slots": {s.name: s.description for s in self.slots},
            "categorical": {s.name: list(s.candidates) for s in self.categorical_slots},
        }


@dataclass(frozen=True)
class RequestableLexicon:
    entries: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "_by_lower", {e.lower(): e for e in self.entries})

    def __contains__(self, name: str) -> bool:
        return name.lower() in self._by_lower

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, name: str) -> str | None:
        return self._by_lower.get(name.lower())

    def by_domain(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {}
        for e in sorted(self.entries):
            out.setdefault(e.split("-", 1)[0], []).append(e)
        return out

    def check_disjoint(self, schema: Schema) -> None:
        overlap = sorted(e for e in self.entries if e in schema)
        if overlap:
            raise SchemaError(f"requestable lexicon overlaps informable schema slots: {', '.join(overlap)}")


def _pairs_no_duplicates(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise SchemaError(f"duplicate key {key!r}")
        seen[key] = value
    return seen


def _read_json(path: Path):
    path = Path(path)
    if not path.is_file():
        raise SchemaError(f"file not found: {path}")
    try:
        return json.loads(path.read_text(encoding="utf-8"), object_pairs_hook=_pairs_no_duplicates)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON in {path}: {exc}") from exc


def schema_from_json(data: Mapping) -> Schema:
    if not isinstance(data, Mapping) or "slots" not in data or "categorical" not in data:
        raise SchemaError('schema must be an object with "slots" and "categorical" keys')
    slots, categorical = data["slots"], data["categorical"]
    for name in categorical:
        if name not in slots:
            raise SchemaError(f"categorical entry {name!r} names a slot absent from \"slots\"")
    defs = []
    for name, description in slots.items():
        candidates = tuple(categorical.get(name, ()))
        if name not in categorical:
            kind = OPEN
        elif candidates == BOOLEAN_CANDIDATES:
            kind = BOOLEAN
        else:
            kind = CATEGORICAL
        defs.append(SlotDef(name, description, kind, candidates))
    return Schema(tuple(defs), tuple(categorical))


def load_schema(path) -> Schema:
    return schema_from_json(_read_json(path))


def dump_schema(schema: Schema, path) -> None:
    Path(path).write_text(json.dumps(schema.to_json(), indent=4, ensure_ascii=False) + "\n", encoding="utf-8")


def requestables_from_json(data: Mapping, schema: Schema | None = None) -> RequestableLexicon:
    if not isinstance(data, Mapping):
        raise SchemaError("requestable lexicon must be a JSON object of domain -> [slot]")
    entries = set()
    for domain, parts in data.items():
        for part in parts:
            entries.add(f"{domain}-{part}")
    lexicon = RequestableLexicon(frozenset(entries))
    if schema is not None:
        lexicon.check_disjoint(schema)
    return lexicon


def load_requestables(path, schema: Schema | None = None) -> RequestableLexicon:
    """Load a ``{domain: [slot_part]}`` lexicon; with ``schema`` also checks disjointness."""
    return requestables_from_json(_read_json(path), schema)


def validate_schema(schema: Schema | Iterable[SlotDef]) -> list[Violation]:
    slots = list(schema.slots if isinstance(schema, Schema) else schema)
    out = []
    seen = set()
    for s in slots:
        if s.name in seen:
            out.append(Violation(s.name, "unique-name", "duplicate slot name"))
        seen.add(s.name)
        parts = s.name.split("-")
        if len(parts) != 2 or not all(parts):
            out.append(Violation(s.name, "name-format", 'name must be "domain-slot" with exactly one "-"'))
        if s.kind == CATEGORICAL and len(s.candidates) < 2:
            out.append(Violation(s.name, "categorical-candidates", "categorical slot needs at least two candidates"))
        elif s.kind == BOOLEAN and tuple(s.candidates) != BOOLEAN_CANDIDATES:
            out.append(Violation(s.name, "boolean-candidates", 'boolean slot candidates must be ["yes", "no"]'))
        elif s.kind == OPEN and s.candidates:
            out.append(Violation(s.name, "open-candidates", "open slot must not list candidates"))
        elif s.kind not in (OPEN, CATEGORICAL, BOOLEAN):
            out.append(Violation(s.name, "kind", f"unknown kind {s.kind!r}"))
    return out
