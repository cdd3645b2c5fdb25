"""Regenerate the bundled corpus, transcript and prediction fixtures from fixture_source.py."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import fixture_source as src  # noqa: E402

from zsdst import resources  # noqa: E402
from zsdst.backend import TranscriptEntry, TranscriptStore  # noqa: E402
from zsdst.prompting import build_task_prompt, build_turn_message  # noqa: E402
from zsdst.schema import load_schema  # noqa: E402

MODEL_ID = "chatgpt-jan9"


def expand(dialogue: dict) -> dict:
    turns, prev = [], {}
    for raw in dialogue["turns"]:
        state = dict(prev) if raw["state"] == "same" else dict(raw["state"])
        turn = {"system": raw["system"], "user": raw["user"], "state": state}
        for key in ("requested", "note"):
            if raw.get(key):
                turn[key] = raw[key]
        turns.append(turn)
        prev = state
    return {"id": dialogue["id"], "domains": sorted(dialogue["domains"]), "turns": turns}


def transcripts(dialogues: list[dict], prompt) -> TranscriptStore:
    store = TranscriptStore()
    for d in dialogues:
        for i, raw in enumerate(d["turns"], start=1):
            msg = build_turn_message(prompt, raw["system"], raw["user"], i)
            store.add(TranscriptEntry(d["id"], i, msg.text, raw["response"], MODEL_ID))
    return store


def write_json(path: Path, data) -> None:
    path.write_text(json.dumps(data, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=resources.FIXTURES_DIR)
    args = parser.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)

    prompt = build_task_prompt(load_schema(resources.SCHEMA))
    for dialogues, corpus_name, store_name in ((src.MAIN, "corpus.json", "transcripts.jsonl"),
                                               (src.EXTRA, "corpus_extra.json", "transcripts_extra.jsonl")):
        write_json(args.out / corpus_name, {"dialogues": [expand(d) for d in dialogues]})
        transcripts(dialogues, prompt).dump(args.out / store_name)
    write_json(args.out / "published_predictions.json", {"model_id": MODEL_ID, "dialogues": src.PUBLISHED_PREDICTIONS})
    print(f"wrote fixtures to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
