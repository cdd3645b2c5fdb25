"""Recurring error categories over traces.

Rates are detector-relative: each detector is a heuristic, so rates describe what
the detectors find, not a manual annotation.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import resources
from .corpus import DONTCARE, INFORM, REFER, Dialogue, Turn, classify_gold_value_type
from .extraction import (
    ALIAS,
    FABRICATED,
    REQUESTABLE,
    REQUESTED,
    RESOLUTION_KINDS,
    SCHEMA_SLOT,
    NormalizationTables,
    normalize_value,
    resolve_slot,
)
from .schema import OPEN, RequestableLexicon, Schema
from .tracker import Trace, TurnRecord
from .variants import VariantMap, default_variants

CARRY_OVER = "carry_over_failure"
COREF = "coref_unresolved"
DONTCARE_OVER = "dontcare_overprediction"
CANDIDATE = "candidate_ignored"
HALLUCINATED = "hallucinated_slot"
NORMALIZATION = "arbitrary_normalization"
FULL_STATE = "full_state_prediction"
CATEGORIES = (CARRY_OVER, COREF, DONTCARE_OVER, CANDIDATE, HALLUCINATED, NORMALIZATION, FULL_STATE)

TITLES = {
    CARRY_OVER: "a) Missed carry-over of system-informed values",
    COREF: "b) Unresolved coreference",
    DONTCARE_OVER: "c) Over-predicted dontcare",
    CANDIDATE: "d) Ignored value candidates",
    HALLUCINATED: "e) Hallucinated slots",
    NORMALIZATION: "f) Inconsistent value normalization",
    FULL_STATE: "g) Full state instead of update",
}

DENOMINATORS = {
    CARRY_OVER: "inform-type gold values",
    COREF: "refer-type gold values",
    DONTCARE_OVER: "predicted values for slots without gold value",
    CANDIDATE: "predicted informable values",
    HALLUCINATED: "slot predictions",
    NORMALIZATION: "predicted informable values",
    FULL_STATE: "dialogues",
}
COUNT_UNITS = dict.fromkeys(CATEGORIES, "records") | {FULL_STATE: "dialogues"}

MAX_EXAMPLES = 5


@dataclass(frozen=True)
class ErrorRecord:
    category: str
    dialogue_id: str
    turn: int
    slot: str
    detail: dict = field(default_factory=dict, hash=False)


@lru_cache(maxsize=None)
def default_referents() -> frozenset:
    return frozenset(resources.read_lines(resources.GENERIC_REFERENTS))


# normalization-style evidence across dialogues

CANONICAL_STYLE = "canonical"
NORMALIZED_STYLE = "normalized"


def _normalized_pairs(record: TurnRecord, schema, requestables, tables):
    """(slot, raw value, canonical value) for informable raw pairs of a turn."""
    for raw_name, raw_value in record.raw.pairs.items():
        res = resolve_slot(raw_name, schema, requestables)
        if res.kind not in (SCHEMA_SLOT, ALIAS):
            continue
        canonical = normalize_value(schema[res.name], raw_value, tables)
        if canonical in (REQUESTED, "none", ""):
            continue
        yield res.name, raw_value, canonical


def normalization_styles(traces: Iterable[Trace], schema: Schema, requestables: RequestableLexicon,
                         tables: NormalizationTables | None = None) -> dict[str, dict[str, set]]:
    """slot -> style -> dialogue ids. A raw value equal to its canonical form is ``canonical``."""
    styles: dict[str, dict[str, set]] = {}
    for trace in traces:
        for rec in trace.records:
            for slot, raw, canonical in _normalized_pairs(rec, schema, requestables, tables):
                style = CANONICAL_STYLE if raw == canonical else NORMALIZED_STYLE
                styles.setdefault(slot, {}).setdefault(style, set()).add(trace.dialogue_id)
    return styles


def inconsistent_slots(styles: Mapping[str, Mapping[str, set]]) -> set[str]:
    """Slots whose values are left as-is in one dialogue and reshaped in another."""
    out = set()
    for slot, by_style in styles.items():
        canon, norm = by_style.get(CANONICAL_STYLE, set()), by_style.get(NORMALIZED_STYLE, set())
        if any(a != b for a in canon for b in norm):
            out.add(slot)
    return out


def classify_turn_errors(record: TurnRecord, dialogue: Dialogue, schema: Schema, requestables: RequestableLexicon,
                         variants: VariantMap | None = None, referents: frozenset | None = None,
                         inconsistent: set[str] | None = None,
                         tables: NormalizationTables | None = None) -> list[ErrorRecord]:
    variants = variants or default_variants()
    referents = default_referents() if referents is None else referents
    t = record.turn
    turn: Turn = dialogue.turn(t)
    gold_state = turn.gold_state
    did = dialogue.id
    out = []

    for slot, value in (turn.gold_update or {}).items():
        vtype = classify_gold_value_type(dialogue, t, slot, schema, variants)
        pred = record.state.get(slot)
        # (a) system-informed value not carried into the state
        if vtype == INFORM and not variants.equivalent(slot, pred, value):
            out.append(ErrorRecord(CARRY_OVER, did, t, slot, {"predicted": pred, "gold": value}))
        # (b) a coreference was picked up but not resolved to the referenced value
        if vtype == REFER and pred is not None and not variants.equivalent(slot, pred, value):
            mode = "generic referent" if pred in referents else "mismatch"
            out.append(ErrorRecord(COREF, did, t, slot, {"predicted": pred, "gold": value, "mode": mode}))

    for slot, value in sorted(record.update.informable.items()):
        # (c) dontcare for a slot the user never filled
        if value == DONTCARE and slot not in gold_state:
            out.append(ErrorRecord(DONTCARE_OVER, did, t, slot, {"predicted": value, "gold": None}))
        # (d) categorical slot filled outside its candidate list
        slot_def = schema.get(slot)
        if slot_def is not None and slot_def.kind != OPEN and value != DONTCARE and value not in slot_def.candidates:
            out.append(ErrorRecord(CANDIDATE, did, t, slot,
                                   {"predicted": value, "candidates": list(slot_def.candidates)}))

    # (e) every dropped pair is a hallucinated slot
    for d in record.update.dropped:
        out.append(ErrorRecord(HALLUCINATED, did, t, d.raw_name,
                               {"value": d.raw_value, "resolution": d.resolution.kind, "resolved": d.resolution.name}))

    # (f) value reshaped here while the same slot is left verbatim elsewhere
    if inconsistent:
        for slot, raw, canonical in _normalized_pairs(record, schema, requestables, tables):
            if slot in inconsistent and raw != canonical:
                out.append(ErrorRecord(NORMALIZATION, did, t, slot, {"raw": raw, "canonical": canonical}))

    # (g) the whole state was restated
    if record.full_state:
        out.append(ErrorRecord(FULL_STATE, did, t, "*", {"restated": len(record.state)}))
    return out


def classify_traces(traces: Sequence[Trace], corpus: Iterable[Dialogue], schema: Schema,
                    requestables: RequestableLexicon, variants: VariantMap | None = None,
                    referents: frozenset | None = None, tables: NormalizationTables | None = None) -> list[ErrorRecord]:
    by_id = {d.id: d for d in corpus}
    inconsistent = inconsistent_slots(normalization_styles(traces, schema, requestables, tables))
    records = []
    for trace in traces:
        dialogue = by_id[trace.dialogue_id]
        for rec in trace.records:
            records.extend(classify_turn_errors(rec, dialogue, schema, requestables, variants, referents,
                                                inconsistent, tables))
    return records


@dataclass
class Report:
    dialogue_count: int
    turn_count: int
    categories: dict[str, dict]
    hallucination: dict
    requestable_recall: dict
    dontcare: dict
    full_state_dialogues: list[str]
    examples: dict[str, list[dict]]

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: Mapping) -> "Report":
        return cls(**data)


def _rate(num: int, den: int) -> float | None:
    return num / den if den else None


def aggregate(records: Sequence[ErrorRecord], traces: Sequence[Trace], corpus: Iterable[Dialogue],
              schema: Schema, requestables: RequestableLexicon, variants: VariantMap | None = None) -> Report:
    variants = variants or default_variants()
    by_id = {d.id: d for d in corpus}
    counts = dict.fromkeys(CATEGORIES, 0)
    for r in records:
        counts[r.category] += 1

    # (g) is counted per dialogue, matching its denominator
    full_state = sorted({r.dialogue_id for r in records if r.category == FULL_STATE})
    counts[FULL_STATE] = len(full_state)
    den = dict.fromkeys(CATEGORIES, 0)
    den[FULL_STATE] = len(traces)
    resolution_counts = dict.fromkeys(RESOLUTION_KINDS, 0)
    dc = {"tp": 0, "pred": 0, "gold": 0}
    req_hits: dict[str, list[int]] = {}
    turn_count = 0
    for trace in traces:
        dialogue = by_id[trace.dialogue_id]
        for rec in trace.records:
            turn = dialogue.turn(rec.turn)
            turn_count += 1
            for slot in (turn.gold_update or {}):
                vtype = classify_gold_value_type(dialogue, rec.turn, slot, schema, variants)
                den[CARRY_OVER] += vtype == INFORM
                den[COREF] += vtype == REFER
            for slot in rec.update.informable:
                den[CANDIDATE] += 1
                den[NORMALIZATION] += 1
                den[DONTCARE_OVER] += slot not in turn.gold_state
            for raw_name in rec.raw.pairs:
                resolution_counts[resolve_slot(raw_name, schema, requestables).kind] += 1
            for slot in schema.names:
                g, p = turn.gold_state.get(slot) == DONTCARE, rec.state.get(slot) == DONTCARE
                dc["tp"] += g and p
                dc["gold"] += g
                dc["pred"] += p
            asked = {d.resolution.name for d in rec.update.dropped
                     if d.resolution.kind == REQUESTABLE and d.raw_value.strip() == REQUESTED}
            for slot in turn.requested:
                if slot in requestables:
                    req_hits.setdefault(requestables.get(slot), []).append(int(requestables.get(slot) in asked))
    den[HALLUCINATED] = sum(resolution_counts.values())

    categories = {c: {"count": counts[c], "denominator": den[c], "denominator_label": DENOMINATORS[c],
                      "rate": _rate(counts[c], den[c])} for c in CATEGORIES}
    total_pred = den[HALLUCINATED]
    hallucination = {"total": total_pred, "counts": resolution_counts,
                     "shares": {k: _rate(v, total_pred) for k, v in resolution_counts.items()}}
    support = sum(len(v) for v in req_hits.values())
    per_slot = {s: sum(v) / len(v) for s, v in sorted(req_hits.items())}
    requestable_recall = {
        "micro": _rate(sum(sum(v) for v in req_hits.values()), support),
        "macro": sum(per_slot.values()) / len(per_slot) if per_slot else None,
        "support": support,
        "per_slot": per_slot,
    }
    dontcare = {"precision": _rate(dc["tp"], dc["pred"]), "recall": _rate(dc["tp"], dc["gold"]),
                "predicted": dc["pred"], "gold": dc["gold"]}
    examples = {c: [] for c in CATEGORIES}
    for r in records:
        if len(examples[r.category]) < MAX_EXAMPLES:
            examples[r.category].append({"dialogue_id": r.dialogue_id, "turn": r.turn, "slot": r.slot,
                                         "detail": r.detail})
    return Report(len(traces), turn_count, categories, hallucination, requestable_recall, dontcare,
                  full_state, examples)


def _fmt_rate(x: float | None) -> str:
    return "undefined" if x is None else f"{100 * x:.1f}%"


def render_report(report: Report, fmt: str = "markdown") -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["category", "count", "denominator", "rate"])
        for c in CATEGORIES:
            cat = report.categories[c]
            writer.writerow([c, cat["count"], cat["denominator"], "" if cat["rate"] is None else f"{cat['rate']:.6f}"])
        return buf.getvalue()
    if fmt != "markdown":
        raise ValueError(f"unknown format {fmt!r}")

    lines = ["# Error analysis", "",
             f"{report.dialogue_count} dialogues, {report.turn_count} turns. "
             "Rates are relative to the heuristic detectors.", ""]
    for c in CATEGORIES:
        cat = report.categories[c]
        lines.append(f"## {TITLES[c]}")
        lines.append("")
        lines.append(f"{cat['count']} {COUNT_UNITS[c]}; rate {_fmt_rate(cat['rate'])} of {cat['denominator']} "
                     f"{cat['denominator_label']}.")
        if c == HALLUCINATED:
            shares = report.hallucination["shares"]
            lines.append("Slot predictions by resolution: " + ", ".join(
                f"{k} {_fmt_rate(shares[k])}" for k in (SCHEMA_SLOT, REQUESTABLE, ALIAS, FABRICATED)) + ".")
            rr = report.requestable_recall
            lines.append(f"Requestable recall: {_fmt_rate(rr['macro'])} (macro over slots, support {rr['support']}).")
        if c == DONTCARE_OVER:
            lines.append(f"dontcare precision {_fmt_rate(report.dontcare['precision'])}, "
                         f"recall {_fmt_rate(report.dontcare['recall'])}.")
        if c == FULL_STATE and report.full_state_dialogues:
            lines.append("Dialogues: " + ", ".join(report.full_state_dialogues) + ".")
        lines.append("")
        for ex in report.examples[c]:
            detail = ", ".join(f"{k}={v}" for k, v in ex["detail"].items())
            lines.append(f"- {ex['dialogue_id']} turn {ex['turn']} `{ex['slot']}`: {detail}")
        if report.examples[c]:
            lines.append("")
    return "\n".join(lines)
