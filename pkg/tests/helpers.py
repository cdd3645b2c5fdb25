"""Independent oracles and random generators shared by the test modules.

The oracles deliberately avoid the package's own matching and parsing code.
"""
from __future__ import annotations

import json
import random
import string
from fractions import Fraction

from zsdst import resources
from zsdst.backend import ReplayBackend
from zsdst.corpus import Dialogue, Turn, state_difference
from zsdst.extraction import NormalizedUpdate, RawUpdate
from zsdst.prompting import FOLLOWUP, INITIAL, TurnMessage, build_task_prompt
from zsdst.tracker import Trace, TurnRecord, run_dialogue

VARIANT_GROUPS = json.loads(resources.VALUE_VARIANTS.read_text(encoding="utf-8"))


# JGA oracle

def canonical(slot: str, value):
    if value is None:
        return None
    for group in VARIANT_GROUPS.get(slot, ()):
        if value in group:
            return sorted(group)[0]
    return value


def canon_state(state: dict, slots) -> dict:
    return {s: canonical(s, state.get(s)) for s in slots}


def jga_oracle(pred_states: dict[str, list[dict]], corpus: list[Dialogue], slots: list[str],
               domain: str | None = None, protocol: str = "restrict-filter") -> Fraction | None:
    """Exact fraction of turns whose whole (optionally domain-restricted) state matches."""
    if domain is not None:
        slots = [s for s in slots if s.startswith(domain + "-")]
    hits = total = 0
    for d in corpus:
        if domain is not None and protocol == "restrict-filter":
            if not any(k.startswith(domain + "-") for t in d.turns for k in t.gold_state):
                continue
        for pred, turn in zip(pred_states[d.id], d.turns):
            total += 1
            hits += canon_state(pred, slots) == canon_state(dict(turn.gold_state), slots)
    return Fraction(hits, total) if total else None


# random corpora and corrupted traces

def _word(rng: random.Random) -> str:
    return "".join(rng.choice(string.ascii_lowercase) for _ in range(rng.randint(3, 7)))


def value_pool(slot_def, rng: random.Random) -> list[str]:
    if slot_def.candidates:
        return list(slot_def.candidates)
    pool = [v for group in VARIANT_GROUPS.get(slot_def.name, ()) for v in group]
    return pool + [_word(rng) for _ in range(3)]


def random_corpus(rng: random.Random, schema, n_dialogues: int, max_turns: int) -> list[Dialogue]:
    slot_defs = list(schema)
    pools = {s.name: value_pool(s, rng) for s in slot_defs}
    dialogues = []
    for k in range(n_dialogues):
        domains = rng.sample(sorted(schema.domains), rng.randint(1, 2))
        names = [s.name for s in slot_defs if s.domain in domains]
        state: dict[str, str] = {}
        turns = []
        prev: dict[str, str] = {}
        for t in range(1, rng.randint(1, max_turns) + 1):
            for _ in range(rng.randint(0, 2)):
                slot = rng.choice(names)
                state[slot] = "dontcare" if rng.random() < 0.1 else rng.choice(pools[slot])
            if state and rng.random() < 0.05:
                del state[rng.choice(sorted(state))]
            mention = " ".join(rng.sample(sorted(state.values()), min(2, len(state)))) if state else ""
            system = f"{_word(rng)} {mention}" if rng.random() < 0.4 else _word(rng)
            user = f"{_word(rng)} {mention}" if rng.random() < 0.4 else _word(rng)
            turns.append(Turn(t, system, user, dict(state), state_difference(prev, state)))
            prev = dict(state)
        dialogues.append(Dialogue(f"D{k:03d}", frozenset(domains), tuple(turns)))
    return dialogues


def corrupt_states(rng: random.Random, dialogue: Dialogue, schema, p: float = 0.3) -> list[dict]:
    """Per-turn copies of the gold states, some perturbed; variant swaps keep a turn correct."""
    out = []
    names = schema.names
    for turn in dialogue.turns:
        state = dict(turn.gold_state)
        if rng.random() < p:
            op = rng.choice(("drop", "change", "add", "variant"))
            if op == "drop" and state:
                del state[rng.choice(sorted(state))]
            elif op == "change" and state:
                state[rng.choice(sorted(state))] = _word(rng)
            elif op == "add":
                state[rng.choice(names)] = rng.choice(("dontcare", _word(rng)))
            elif op == "variant":
                for slot, value in sorted(state.items()):
                    for group in VARIANT_GROUPS.get(slot, ()):
                        if value in group:
                            state[slot] = rng.choice(group)
        out.append(state)
    return out


def make_trace(dialogue_id: str, states: list[dict]) -> Trace:
    trace = Trace(dialogue_id, model_id="synthetic")
    prev: dict[str, str] = {}
    for i, state in enumerate(states, start=1):
        diff = state_difference(prev, state)
        update = NormalizedUpdate(informable={k: v for k, v in diff.items() if k in state},
                                  removals={k for k in diff if k not in state})
        message = TurnMessage("", i, INITIAL if i == 1 else FOLLOWUP)
        trace.records.append(TurnRecord(message, json.dumps(diff), RawUpdate(dict(diff), 1), update, dict(state)))
        prev = state
    return trace


def replay_all(dialogues, store, schema, requestables) -> list[Trace]:
    backend = ReplayBackend(store)
    prompt = build_task_prompt(schema)
    return [run_dialogue(backend.open_session(d.id), schema, requestables, d, prompt) for d in dialogues]


# balanced-brace extraction oracle

def fragment_oracle(text: str) -> list[dict]:
    """Leftmost-first shortest closing brace that parses; flat string/number maps kept."""
    out = []
    i = 0
    while i < len(text):
        if text[i] != "{":
            i += 1
            continue
        parsed = None
        for j in range(i + 1, len(text)):
            if text[j] != "}":
                continue
            try:
                parsed = json.loads(text[i:j + 1])
            except ValueError:
                continue
            break
        if parsed is None:
            i += 1
            continue
        if all(isinstance(v, (str, int, float)) and not isinstance(v, bool) for v in parsed.values()):
            out.append({k: v if isinstance(v, str) else str(v) for k, v in parsed.items()})
        i = j + 1
    return out


PROSE = ["The following slots were updated:", "Sure!", "Here you go", "no change {here", "}", "a { b",
         "Copy code", "It's worth noting that", "{not json}", "values: {x}", ""]
KEY_CHARS = string.ascii_letters + "-_ {}\"'é"
VALUE_CHARS = string.ascii_letters + string.digits + " :{}\"\\'-?é\n"


def random_object(rng: random.Random, depth: int = 0) -> dict:
    obj = {}
    for _ in range(rng.randint(0, 4)):
        key = "".join(rng.choice(KEY_CHARS) for _ in range(rng.randint(1, 12)))
        roll = rng.random()
        if roll < 0.7:
            obj[key] = "".join(rng.choice(VALUE_CHARS) for _ in range(rng.randint(0, 10)))
        elif roll < 0.8:
            obj[key] = rng.randint(-50, 500)
        elif roll < 0.85:
            obj[key] = rng.choice((True, False, None))
        elif depth == 0:
            obj[key] = random_object(rng, 1)
        else:
            obj[key] = [1, "a"]
    return obj


def random_embedding(rng: random.Random) -> str:
    parts = []
    for _ in range(rng.randint(0, 4)):
        parts.append(rng.choice(PROSE))
        obj = json.dumps(random_object(rng), ensure_ascii=rng.random() < 0.5,
                         indent=rng.choice((None, 1, 4)))
        style = rng.random()
        if style < 0.3:
            parts.append(f"```json\n{obj}\n```")
        elif style < 0.4:
            parts.append(f"`{obj}`")
        elif style < 0.5:
            parts.append(obj[:-1])  # truncated object
        else:
            parts.append(obj)
    parts.append(rng.choice(PROSE))
    return rng.choice((" ", "\n", "\n\n")).join(parts)
