"""Joint goal accuracy and related scores of traces against gold states."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .corpus import DONTCARE, NONE, VALUE_TYPES, Dialogue, classify_gold_value_type, value_type
from .schema import Schema
from .tracker import Trace
from .variants import VariantMap, default_variants

RESTRICT_FILTER = "restrict-filter"
RESTRICT_ALL = "restrict-all"
PER_DOMAIN_PROTOCOLS = (RESTRICT_FILTER, RESTRICT_ALL)


class EvalError(ValueError):
    pass


@dataclass
class TypeScore:
    precision: float | None
    recall: float | None
    f1: float | None
    support: int
    predicted: int


@dataclass
class Metrics:
    jga: float | None
    per_domain_jga: dict[str, float | None]
    per_type: dict[str, TypeScore]
    dontcare_confusion: dict[str, dict[str, int]]
    turn_count: int
    dialogue_count: int
    per_domain_protocol: str = RESTRICT_FILTER

    def to_json(self) -> dict:
        return asdict(self)


def values_match(slot: str, predicted: str | None, gold: str | None, variants: VariantMap | None = None) -> bool:
    return (variants or default_variants()).equivalent(slot, predicted, gold)


def align(traces: Iterable[Trace], corpus: Iterable[Dialogue]) -> list[tuple[Trace, Dialogue]]:
    by_id = {d.id: d for d in corpus}
    pairs = []
    for trace in traces:
        dialogue = by_id.get(trace.dialogue_id)
        if dialogue is None:
            raise EvalError(f"trace {trace.dialogue_id} has no corpus dialogue")
        if not trace.complete or len(trace.records) != len(dialogue.turns):
            raise EvalError(f"trace {trace.dialogue_id} has {len(trace.records)} turns, "
                            f"corpus has {len(dialogue.turns)}")
        pairs.append((trace, dialogue))
    return pairs


def _slots(schema: Schema | None, *states: Mapping[str, str]) -> list[str]:
    if schema is not None:
        return schema.names
    return sorted({k for s in states for k in s})


def turn_correct(pred: Mapping[str, str], gold: Mapping[str, str], slots: Sequence[str], variants: VariantMap) -> bool:
    return all(variants.equivalent(s, pred.get(s), gold.get(s)) for s in slots)


def _jga(pairs, variants, schema, domain=None, protocol=RESTRICT_FILTER) -> tuple[int, int]:
    correct = total = 0
    for trace, dialogue in pairs:
        if domain is not None and protocol == RESTRICT_FILTER:
            if not any(k.split("-", 1)[0] == domain for t in dialogue.turns for k in t.gold_state):
                continue
        for rec, turn in zip(trace.records, dialogue.turns):
            slots = _slots(schema, rec.state, turn.gold_state)
            if domain is not None:
                slots = [s for s in slots if s.split("-", 1)[0] == domain]
            total += 1
            correct += turn_correct(rec.state, turn.gold_state, slots, variants)
    return correct, total


def _ratio(num: int, den: int) -> float | None:
    return num / den if den else None


def per_domain_jga(traces, corpus, variants: VariantMap | None = None, domain: str = "",
                   schema: Schema | None = None, protocol: str = RESTRICT_FILTER) -> float | None:
    """JGA on states restricted to ``domain``; ``None`` when no turn qualifies.

    ``restrict-filter`` scores only dialogues whose gold states touch the domain;
    ``restrict-all`` scores every dialogue.
    """
    if protocol not in PER_DOMAIN_PROTOCOLS:
        raise EvalError(f"unknown per-domain protocol {protocol!r}")
    if schema is not None and domain not in schema.domains:
        raise EvalError(f"unknown domain {domain!r}")
    pairs = align(traces, corpus)
    return _ratio(*_jga(pairs, variants or default_variants(), schema, domain, protocol))


def _gold_spans(dialogue: Dialogue, schema, variants):
    """(turn, slot, value, type, last_turn) for every gold update entry."""
    n = len(dialogue.turns)
    for turn in dialogue.turns:
        for slot, value in (turn.gold_update or {}).items():
            end = turn.index
            while end < n and slot not in (dialogue.turns[end].gold_update or {}):
                end += 1
            vtype = classify_gold_value_type(dialogue, turn.index, slot, schema, variants)
            yield turn.index, slot, value, vtype, end


def per_type_metrics(traces, corpus, variants: VariantMap | None = None,
                     schema: Schema | None = None) -> tuple[dict[str, TypeScore], dict[str, dict[str, int]]]:
    variants = variants or default_variants()
    pairs = align(traces, corpus)
    support = dict.fromkeys(VALUE_TYPES, 0)
    recalled = dict.fromkeys(VALUE_TYPES, 0)
    predicted = dict.fromkeys(VALUE_TYPES, 0)
    precise = dict.fromkeys(VALUE_TYPES, 0)
    confusion = {"gold_dontcare": {"pred_dontcare": 0, "pred_other": 0},
                 "gold_other": {"pred_dontcare": 0, "pred_other": 0}}

    for trace, dialogue in pairs:
        states = trace.states()
        for t, slot, value, vtype, end in _gold_spans(dialogue, schema, variants):
            support[vtype] += 1
            target = None if value == NONE else value
            if any(variants.equivalent(slot, states[i - 1].get(slot), target) for i in range(t, end + 1)):
                recalled[vtype] += 1

        prior: Mapping[str, str] = {}
        for rec, turn in zip(trace.records, dialogue.turns):
            entries = list(rec.update.informable.items()) + [(s, NONE) for s in sorted(rec.update.removals)]
            for slot, value in entries:
                slot_def = schema.get(slot) if schema is not None else None
                vtype = value_type(slot, value, kind=slot_def.kind if slot_def else None,
                                   system=turn.system_utterance, user=turn.user_utterance,
                                   prior=prior, variants=variants)
                predicted[vtype] += 1
                target = None if value == NONE else value
                precise[vtype] += variants.equivalent(slot, target, turn.gold_state.get(slot))
            prior = rec.state

            for slot in _slots(schema, rec.state, turn.gold_state):
                row = "gold_dontcare" if turn.gold_state.get(slot) == DONTCARE else "gold_other"
                col = "pred_dontcare" if rec.state.get(slot) == DONTCARE else "pred_other"
                confusion[row][col] += 1

    table = {}
    for vtype in VALUE_TYPES:
        p = _ratio(precise[vtype], predicted[vtype])
        r = _ratio(recalled[vtype], support[vtype])
        f1 = 2 * p * r / (p + r) if p is not None and r is not None and p + r > 0 else None
        table[vtype] = TypeScore(p, r, f1, support[vtype], predicted[vtype])
    return table, confusion


def joint_goal_accuracy(traces, corpus, variants: VariantMap | None = None, schema: Schema | None = None,
                        protocol: str = RESTRICT_FILTER) -> Metrics:
    """A turn is correct iff every slot's predicted and gold values match, absence included."""
    traces, corpus = list(traces), list(corpus)
    variants = variants or default_variants()
    pairs = align(traces, corpus)
    correct, total = _jga(pairs, variants, schema)
    if schema is not None:
        domains = sorted(schema.domains)
    else:
        domains = sorted({k.split("-", 1)[0] for _, d in pairs for t in d.turns for k in t.gold_state})
    per_domain = {dom: _ratio(*_jga(pairs, variants, schema, dom, protocol)) for dom in domains}
    per_type, confusion = per_type_metrics(traces, corpus, variants, schema)
    return Metrics(_ratio(correct, total), per_domain, per_type, confusion, total, len(pairs), protocol)


def load_references(path) -> dict | None:
    path = Path(path) if path else None
    if path is None or not path.is_file():
        return None
    return json.loads(path.read_text(encoding="utf-8"))


_DOMAIN_HEADERS = {"attraction": "attr.", "hotel": "hotel", "restaurant": "rest.", "taxi": "taxi", "train": "train"}


def _pct(x: float | None) -> str:
    return "n/a" if x is None else f"{100 * x:.1f}"


def render_comparison(metrics: Metrics, reference_file=None, fmt: str = "markdown",
                      label: str = "this run") -> str:
    """Per-domain JGA of this run, optionally beside published reference rows."""
    refs = load_references(reference_file)
    domains = refs["domains"] if refs else sorted(metrics.per_domain_jga)
    ours = [metrics.per_domain_jga.get(d) for d in domains]
    known = [v for v in ours if v is not None]
    avg = sum(known) / len(known) if known and len(known) == len(ours) else None
    header = ["Models"] + [_DOMAIN_HEADERS.get(d, d) for d in domains] + ["avg."]
    rows = [[label] + [_pct(v) for v in ours] + [_pct(avg)]]
    if refs:
        for r in refs["rows"]:
            rows.append([f"{r['model']} (reference)"] + [f"{r[d]:.1f}" for d in domains] + [f"{r['avg']:.2f}"])

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt != "markdown":
        raise ValueError(f"unknown format {fmt!r}")

    lines = [f"Overall JGA ({label}): {_pct(metrics.jga)}% over {metrics.turn_count} turns, "
             f"{metrics.dialogue_count} dialogues; per-domain protocol: {metrics.per_domain_protocol}"]
    if refs:
        head = refs["headline"]
        lines.append(f"Reference {head['label']}: {head['jga']:.1f}% (published, not reproduced here)")
    lines.append("")
    lines.append("| " + " | ".join(header) + " |")
    lines.append("|" + "|".join("---" for _ in header) + "|")
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    if refs:
        lines.append("")
        lines.append(f"Reference rows: {refs['note']}")
    return "\n".join(lines) + "\n"
