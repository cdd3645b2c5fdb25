"""Command-line entry point: make-prompt, run, evaluate, analyze, convert."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from . import analysis, resources
from .backend import (
    FAULT,
    REMOTE,
    BackendConfigError,
    BackendError,
    FaultBackend,
    RemoteBackend,
    ReplayBackend,
    TranscriptStore,
    persist_transcript,
)
from .config import ConfigError, RunConfig, load_config
from .corpus import CorpusError, Dialogue, convert_multiwoz, dump_corpus, load_corpus
from .evaluation import PER_DOMAIN_PROTOCOLS, EvalError, align, joint_goal_accuracy, render_comparison
from .extraction import NormalizationTables
from .prompting import PromptError, build_task_prompt
from .schema import RequestableLexicon, Schema, SchemaError, load_requestables, load_schema, validate_schema
from .tracker import Trace, run_dialogue
from .variants import VariantMap

log = logging.getLogger("zsdst")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PARTIAL = 3

FORMATS = ("markdown", "json", "csv")
_SUFFIX = {"markdown": "md", "json": "json", "csv": "csv"}


class UsageError(Exception):
    """A configuration or data problem; maps to exit code 2."""


@dataclass
class Inputs:
    config: RunConfig
    schema: Schema
    requestables: RequestableLexicon
    corpus: list[Dialogue]
    variants: VariantMap
    tables: NormalizationTables


def _load_inputs(args, need_corpus: bool = True) -> Inputs:
    try:
        cfg = load_config(args.config, args.output)
        if args.parallelism is not None:
            if args.parallelism < 1:
                raise ConfigError("--parallelism must be >= 1")
            cfg = replace(cfg, parallelism=args.parallelism)
        if getattr(args, "per_domain_protocol", None):
            cfg = replace(cfg, per_domain_protocol=args.per_domain_protocol)
        cfg.check_files()
        schema = load_schema(cfg.schema)
        violations = validate_schema(schema)
        if violations:
            raise UsageError("; ".join(f"{v.rule}: {v.slot}: {v.message}" for v in violations))
        requestables = load_requestables(cfg.requestables, schema)
        corpus = []
        if need_corpus:
            for path in cfg.corpus:
                corpus.extend(load_corpus(path))
            ids = [d.id for d in corpus]
            if len(set(ids)) != len(ids):
                raise UsageError("dialogue ids repeat across corpus files")
        variants = VariantMap.load(cfg.variants)
        tables = NormalizationTables.load(cfg.normalization, cfg.emptiness)
    except (ConfigError, SchemaError, CorpusError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    cfg.output.mkdir(parents=True, exist_ok=True)
    return Inputs(cfg, schema, requestables, corpus, variants, tables)


def _select(corpus: list[Dialogue], wanted: str | None) -> list[Dialogue]:
    if not wanted:
        return corpus
    ids = [w.strip() for w in wanted.split(",") if w.strip()]
    known = {d.id for d in corpus}
    unknown = [i for i in ids if i not in known]
    if unknown:
        raise UsageError(f"unknown dialogue ids: {', '.join(unknown)}")
    return [d for d in corpus if d.id in set(ids)]


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


# make-prompt

def cmd_make_prompt(args) -> int:
    inputs = _load_inputs(args, need_corpus=False)
    try:
        prompt = build_task_prompt(inputs.schema)
    except PromptError as exc:
        raise UsageError(str(exc)) from exc
    target = Path(args.out) if args.out else inputs.config.output / "prompt.txt"
    _write(target, prompt.text)
    sys.stdout.write(prompt.text + "\n")
    return EXIT_OK


# run

def _make_backend(cfg: RunConfig):
    if cfg.backend_kind == REMOTE:
        return RemoteBackend(cfg.backend)
    if cfg.backend_kind == FAULT:
        if cfg.fault_script is None:
            raise UsageError("fault backend needs backend.fault_script")
        return FaultBackend.load(cfg.fault_script)
    if not cfg.store:
        raise UsageError("replay backend needs backend.store")
    return ReplayBackend(TranscriptStore.load(*cfg.store))


def trace_path(output: Path, dialogue_id: str, partial: bool = False) -> Path:
    return output / "traces" / f"{dialogue_id}{'.partial' if partial else ''}.jsonl"


def is_complete_trace(path: Path, dialogue: Dialogue) -> bool:
    if not path.is_file():
        return False
    try:
        trace = Trace.load(path)
    except (ValueError, KeyError):
        return False
    return trace.complete and len(trace.records) == len(dialogue.turns)


def _run_one(backend, inputs: Inputs, dialogue: Dialogue, prompt) -> Trace:
    out = inputs.config.output
    try:
        session = backend.open_session(dialogue.id)
    except BackendConfigError:
        raise
    except BackendError as exc:
        trace = Trace(dialogue.id, complete=False, error=str(exc))
    else:
        trace = run_dialogue(session, inputs.schema, inputs.requestables, dialogue, prompt, inputs.tables)
        if session.exchanges:
            transcript = out / "transcripts" / f"{dialogue.id}.jsonl"
            transcript.parent.mkdir(parents=True, exist_ok=True)
            transcript.unlink(missing_ok=True)
            persist_transcript(session, transcript)
    if trace.complete:
        trace.dump(trace_path(out, dialogue.id))
        trace_path(out, dialogue.id, partial=True).unlink(missing_ok=True)
    else:
        trace.dump(trace_path(out, dialogue.id, partial=True))
        log.warning("%s incomplete: %s", dialogue.id, trace.error)
    return trace


def cmd_run(args) -> int:
    inputs = _load_inputs(args)
    cfg = inputs.config
    dialogues = _select(inputs.corpus, args.dialogues)
    (cfg.output / "traces").mkdir(parents=True, exist_ok=True)
    todo = [d for d in dialogues if not is_complete_trace(trace_path(cfg.output, d.id), d)]
    skipped = len(dialogues) - len(todo)
    try:
        backend = _make_backend(cfg)
        prompt = build_task_prompt(inputs.schema)
        with ThreadPoolExecutor(max_workers=cfg.parallelism) as pool:
            traces = list(pool.map(lambda d: _run_one(backend, inputs, d, prompt), todo))
    except (BackendConfigError, PromptError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    partial = sum(not t.complete for t in traces)
    print(f"processed {len(traces)} dialogues, skipped {skipped} already complete, "
          f"{len(traces) - partial} complete, {partial} partial")
    return EXIT_PARTIAL if partial else EXIT_OK


# evaluate / analyze

def _traces_for(args, inputs: Inputs) -> tuple[list[Trace], list[Dialogue]]:
    dialogues = _select(inputs.corpus, args.dialogues)
    traces_dir = Path(args.traces) if args.traces else inputs.config.output / "traces"
    if not traces_dir.is_dir():
        raise UsageError(f"traces directory not found: {traces_dir}")
    by_id = {d.id: d for d in dialogues}
    traces = []
    for path in sorted(traces_dir.glob("*.jsonl")):
        if path.name.endswith(".partial.jsonl"):
            continue
        try:
            trace = Trace.load(path)
        except (ValueError, KeyError) as exc:
            raise UsageError(f"unreadable trace {path}: {exc}") from exc
        if trace.dialogue_id not in by_id:
            if args.dialogues:
                continue
            raise UsageError(f"trace {trace.dialogue_id} has no corpus dialogue")
        traces.append(trace)
    if not traces:
        raise UsageError(f"no complete traces in {traces_dir}")
    return traces, dialogues


def _dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def cmd_evaluate(args) -> int:
    inputs = _load_inputs(args)
    traces, dialogues = _traces_for(args, inputs)
    cfg = inputs.config
    try:
        metrics = joint_goal_accuracy(traces, dialogues, inputs.variants, inputs.schema, cfg.per_domain_protocol)
    except EvalError as exc:
        raise UsageError(str(exc)) from exc
    _write(cfg.output / "metrics.json", _dump_json(metrics.to_json()))
    rendered = {}
    for fmt in ("markdown", "csv"):
        rendered[fmt] = render_comparison(metrics, cfg.references, fmt)
        _write(cfg.output / f"comparison.{_SUFFIX[fmt]}", rendered[fmt])
    fmt = args.format or "markdown"
    sys.stdout.write(_dump_json(metrics.to_json()) if fmt == "json" else rendered[fmt])
    return EXIT_OK


def cmd_analyze(args) -> int:
    inputs = _load_inputs(args)
    traces, dialogues = _traces_for(args, inputs)
    cfg = inputs.config
    try:
        align(traces, dialogues)
    except EvalError as exc:
        raise UsageError(str(exc)) from exc
    referents = frozenset(resources.read_lines(cfg.referents))
    records = analysis.classify_traces(traces, dialogues, inputs.schema, inputs.requestables, inputs.variants,
                                       referents, inputs.tables)
    report = analysis.aggregate(records, traces, dialogues, inputs.schema, inputs.requestables, inputs.variants)
    rendered = {fmt: analysis.render_report(report, fmt) for fmt in FORMATS}
    for fmt, text in rendered.items():
        _write(cfg.output / f"report.{_SUFFIX[fmt]}", text)
    _write(cfg.output / "errors.jsonl", "".join(
        json.dumps({"category": r.category, "dialogue_id": r.dialogue_id, "turn": r.turn, "slot": r.slot,
                    "detail": r.detail}, ensure_ascii=False) + "\n" for r in records))
    sys.stdout.write(rendered[args.format or "markdown"])
    return EXIT_OK


# convert

def cmd_convert(args) -> int:
    src = Path(args.source)
    try:
        data = json.loads(src.read_text(encoding="utf-8"))
        ids = [i.strip() for i in args.dialogues.split(",")] if args.dialogues else None
        dialogues = convert_multiwoz(data, ids)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot convert {src}: {exc}") from exc
    if args.output:
        out = Path(args.output)
    else:
        try:
            out = load_config(args.config).output
        except ConfigError as exc:
            raise UsageError(str(exc)) from exc
    out.mkdir(parents=True, exist_ok=True)
    target = out / (args.name or "corpus.json")
    dump_corpus(dialogues, target)
    print(f"converted {len(dialogues)} dialogues to {target}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="INI config (default: bundled replay config)")
    common.add_argument("--output", default=None, help="output directory (overrides the config)")
    common.add_argument("--dialogues", default=None, help="comma-separated dialogue ids")
    common.add_argument("--parallelism", type=int, default=None)
    common.add_argument("--format", choices=FORMATS, default=None, help="stdout rendering")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="zsdst", description="Zero-shot dialogue state tracking with a chat model.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make-prompt", parents=[common], help="write the task prompt")
    p.add_argument("--out", default=None, help="prompt file (default: <output>/prompt.txt)")
    p.set_defaults(func=cmd_make_prompt)

    p = sub.add_parser("run", parents=[common], help="track every dialogue, writing one trace each")
    p.set_defaults(func=cmd_run)

    for name, func, text in (("evaluate", cmd_evaluate, "joint goal accuracy of traces"),
                             ("analyze", cmd_analyze, "error-category report over traces")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--traces", default=None, help="traces directory (default: <output>/traces)")
        p.add_argument("--per-domain-protocol", choices=PER_DOMAIN_PROTOCOLS, default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("convert", parents=[common], help="convert upstream MultiWOZ data.json")
    p.add_argument("source")
    p.add_argument("--name", default=None, help="output file name (default: corpus.json)")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
