"""Per-slot value equivalence classes used for lenient matching."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Mapping

from . import resources


@dataclass(frozen=True)
class VariantMap:
    """Maps ``slot -> value -> frozenset(class)``.

    A value with no class entry is only equivalent to itself, so equivalence is
    reflexive and symmetric by construction.
    """

    classes: Mapping[str, Mapping[str, frozenset]] = field(default_factory=dict)

    @classmethod
    def from_json(cls, data: Mapping) -> "VariantMap":
        classes: dict[str, dict[str, frozenset]] = {}
        for slot, groups in data.items():
            per_slot = classes.setdefault(slot.lower(), {})
            for group in groups:
                members = frozenset(v.strip().lower() for v in group)
                for v in members:
                    if v in per_slot and per_slot[v] != members:
                        raise ValueError(f"variant classes for {slot!r} overlap on {v!r}")
                    per_slot[v] = members
        return cls(classes)

    @classmethod
    def load(cls, path) -> "VariantMap":
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))

    def variants(self, slot: str, value: str) -> frozenset:
        per_slot = self.classes.get(slot.lower(), {})
        return per_slot.get(value, frozenset((value,)))

    def equivalent(self, slot: str, a: str | None, b: str | None) -> bool:
        if a is None or b is None:
            return a is None and b is None
        return a == b or b in self.variants(slot, a)


@lru_cache(maxsize=None)
def default_variants() -> VariantMap:
    return VariantMap.load(resources.VALUE_VARIANTS)
