"""Chat sessions over a remote endpoint, a transcript store, or a fault script."""
from __future__ import annotations

import json
import logging
import os
import threading
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

import httpx

from .prompting import TurnMessage

log = logging.getLogger(__name__)

REMOTE = "remote"
REPLAY = "replay"
FAULT = "fault"

API_KEY_ENV = "DST_API_KEY"
RETRY_STATUS = frozenset({429, 500, 502, 503, 504})


class BackendError(RuntimeError):
    pass


class BackendConfigError(BackendError):
    pass


class RetriesExhausted(BackendError):
    pass


class ReplayMissing(BackendError):
    pass


@dataclass(frozen=True)
class BackendConfig:
    endpoint_url: str = "https://api.openai.com/v1/chat/completions"
    model_id: str = "gpt-3.5-turbo"
    temperature: float = 0.0
    timeout: float = 60.0
    max_retries: int = 5
    retry_base_delay: float = 1.0
    rate_limit: float = 60.0  # requests per minute
    api_key_env: str = API_KEY_ENV

    def __post_init__(self):
        if self.max_retries < 0:
            raise BackendConfigError("max_retries must be >= 0")
        if self.rate_limit <= 0:
            raise BackendConfigError("rate_limit must be > 0")


class TokenBucket:
    """Thread-safe limiter shared by all sessions of one backend."""

    def __init__(self, per_minute: float, capacity: float = 1.0,
                 clock: Callable[[], float] = time.monotonic, sleep: Callable[[float], None] = time.sleep):
        self.rate = per_minute / 60.0
        self.capacity = capacity
        self.tokens = capacity
        self.clock = clock
        self.sleep = sleep
        self.updated = clock()
        self.lock = threading.Lock()

    def acquire(self) -> None:
        while True:
            with self.lock:
                now = self.clock()
                self.tokens = min(self.capacity, self.tokens + (now - self.updated) * self.rate)
                self.updated = now
                if self.tokens >= 1:
                    self.tokens -= 1
                    return
                wait = (1 - self.tokens) / self.rate
            self.sleep(wait)


@dataclass(frozen=True)
class TranscriptEntry:
    dialogue_id: str
    turn: int
    prompt: str
    response: str
    model_id: str = ""
    timestamp: str = ""

    def to_json(self) -> dict:
        return {"dialogue_id": self.dialogue_id, "turn": self.turn, "prompt": self.prompt,
                "response": self.response, "model_id": self.model_id, "timestamp": self.timestamp}


@dataclass
class TranscriptStore:
    entries: dict[tuple[str, int], TranscriptEntry] = field(default_factory=dict)

    def add(self, entry: TranscriptEntry) -> None:
        key = (entry.dialogue_id, entry.turn)
        if key in self.entries:
            raise ValueError(f"duplicate transcript entry {key}")
        self.entries[key] = entry

    @property
    def model_versions(self) -> set[str]:
        return {e.model_id for e in self.entries.values()}

    def dialogue_ids(self) -> list[str]:
        return sorted({d for d, _ in self.entries})

    def turn_count(self, dialogue_id: str) -> int:
        return sum(1 for d, _ in self.entries if d == dialogue_id)

    def response(self, dialogue_id: str, turn: int) -> str:
        try:
            return self.entries[(dialogue_id, turn)].response
        except KeyError:
            raise ReplayMissing(f"no recorded response for {dialogue_id} turn {turn}") from None

    @classmethod
    def load(cls, *paths) -> "TranscriptStore":
        store = cls()
        for path in paths:
            for line in Path(path).read_text(encoding="utf-8").splitlines():
                if line.strip():
                    rec = json.loads(line)
                    store.add(TranscriptEntry(rec["dialogue_id"], int(rec["turn"]), rec.get("prompt", ""),
                                              rec["response"], rec.get("model_id", ""), rec.get("timestamp", "")))
        return store

    def dump(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for key in sorted(self.entries):
                fh.write(json.dumps(self.entries[key].to_json(), ensure_ascii=False) + "\n")


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class ChatSession:
    """One chat bound to one dialogue; strictly sequential."""

    backend_kind = ""

    def __init__(self, dialogue_id: str, model_id: str = ""):
        self.dialogue_id = dialogue_id
        self.model_id = model_id
        self.session_id = f"{self.backend_kind}-{dialogue_id}-{id(self):x}"
        self.history: list[tuple[str, str]] = []
        self.exchanges: list[TranscriptEntry] = []

    @property
    def sends(self) -> int:
        return len(self.exchanges)

    def send(self, message: TurnMessage) -> str:
        expected = self.sends + 1
        if message.turn_index != expected:
            raise BackendError(f"out-of-order turn {message.turn_index}, expected {expected}")
        response, stamp = self._complete(message)
        self.history.append(("user", message.text))
        self.history.append(("assistant", response))
        self.exchanges.append(TranscriptEntry(self.dialogue_id, message.turn_index, message.text,
                                              response, self.model_id, stamp))
        return response

    def _complete(self, message: TurnMessage) -> tuple[str, str]:
        raise NotImplementedError


class RemoteSession(ChatSession):
    backend_kind = REMOTE

    def __init__(self, backend: "RemoteBackend", dialogue_id: str):
        super().__init__(dialogue_id, backend.config.model_id)
        self.backend = backend

    def _complete(self, message):
        messages = [{"role": role, "content": text} for role, text in self.history]
        messages.append({"role": "user", "content": message.text})
        return self.backend.complete(messages), _now()


class RemoteBackend:
    """OpenAI-style chat-completions client with retries and a shared rate limit."""

    kind = REMOTE

    def __init__(self, config: BackendConfig, *, client: httpx.Client | None = None,
                 sleep: Callable[[float], None] = time.sleep, limiter: TokenBucket | None = None):
        self.config = config
        self.sleep = sleep
        self.client = client
        self.limiter = limiter or TokenBucket(config.rate_limit, sleep=sleep)

    def _api_key(self) -> str:
        key = os.environ.get(self.config.api_key_env)
        if not key:
            raise BackendConfigError(f"credential environment variable {self.config.api_key_env} is not set")
        return key

    def open_session(self, dialogue_id: str) -> RemoteSession:
        self._api_key()
        return RemoteSession(self, dialogue_id)

    def complete(self, messages: Sequence[Mapping[str, str]]) -> str:
        cfg = self.config
        payload = {"model": cfg.model_id, "messages": list(messages), "temperature": cfg.temperature}
        headers = {"Authorization": f"Bearer {self._api_key()}"}
        client = self.client or httpx.Client(timeout=cfg.timeout)
        try:
            for attempt in range(cfg.max_retries + 1):
                self.limiter.acquire()
                try:
                    resp = client.post(cfg.endpoint_url, json=payload, headers=headers, timeout=cfg.timeout)
                except (httpx.TimeoutException, httpx.TransportError) as exc:
                    problem = type(exc).__name__
                else:
                    if resp.status_code == 200:
                        return resp.json()["choices"][0]["message"]["content"]
                    if resp.status_code not in RETRY_STATUS:
                        raise BackendError(f"endpoint returned HTTP {resp.status_code}")
                    problem = f"HTTP {resp.status_code}"
                if attempt == cfg.max_retries:
                    raise RetriesExhausted(f"gave up after {attempt + 1} attempts ({problem})")
                delay = cfg.retry_base_delay * 2 ** attempt
                log.warning("transient failure (%s); retry %d/%d in %.2fs", problem, attempt + 1,
                            cfg.max_retries, delay)
                self.sleep(delay)
        finally:
            if self.client is None:
                client.close()
        raise AssertionError("unreachable")


class ReplaySession(ChatSession):
    backend_kind = REPLAY

    def __init__(self, store: TranscriptStore, dialogue_id: str):
        model = next((e.model_id for (d, _), e in store.entries.items() if d == dialogue_id), "")
        super().__init__(dialogue_id, model)
        self.store = store

    def _complete(self, message):
        entry = self.store.entries.get((self.dialogue_id, message.turn_index))
        if entry is None:
            raise ReplayMissing(f"no recorded response for {self.dialogue_id} turn {message.turn_index}")
        if entry.prompt and entry.prompt != message.text:
            log.warning("%s turn %d: prompt differs from the recorded one", self.dialogue_id, message.turn_index)
        return entry.response, entry.timestamp


class ReplayBackend:
    kind = REPLAY

    def __init__(self, store: TranscriptStore):
        self.store = store

    def open_session(self, dialogue_id: str) -> ReplaySession:
        if self.store.turn_count(dialogue_id) == 0:
            raise BackendError(f"dialogue {dialogue_id} is not in the transcript store")
        return ReplaySession(self.store, dialogue_id)


@dataclass(frozen=True)
class Fault:
    message: str = "injected fault"


class FaultSession(ChatSession):
    backend_kind = FAULT

    def __init__(self, script: Sequence, dialogue_id: str):
        super().__init__(dialogue_id, "fault-script")
        self.script = list(script)

    def _complete(self, message):
        i = message.turn_index - 1
        if i >= len(self.script):
            raise BackendError(f"fault script for {self.dialogue_id} has only {len(self.script)} responses")
        item = self.script[i]
        if isinstance(item, Fault):
            raise BackendError(item.message)
        return item, ""


class FaultBackend:
    """Scripted responses per dialogue; ``Fault`` items raise instead of answering."""

    kind = FAULT

    def __init__(self, scripts: Mapping[str, Sequence]):
        self.scripts = dict(scripts)

    @classmethod
    def load(cls, path) -> "FaultBackend":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        scripts = {did: [Fault(i["error"]) if isinstance(i, dict) else i for i in items]
                   for did, items in data.items()}
        return cls(scripts)

    def open_session(self, dialogue_id: str) -> FaultSession:
        if dialogue_id not in self.scripts:
            raise BackendError(f"no fault script for {dialogue_id}")
        return FaultSession(self.scripts[dialogue_id], dialogue_id)


def open_session(backend, dialogue_id: str) -> ChatSession:
    return backend.open_session(dialogue_id)


def persist_transcript(session: ChatSession, path) -> None:
    """Append one JSONL record per exchange. Use one file per session."""
    if not session.exchanges:
        raise BackendError("session has no exchanges to persist")
    with open(path, "a", encoding="utf-8") as fh:
        for e in session.exchanges:
            fh.write(json.dumps(e.to_json(), ensure_ascii=False) + "\n")


def store_from_entries(entries: Iterable[TranscriptEntry]) -> TranscriptStore:
    store = TranscriptStore()
    for e in entries:
        store.add(e)
    return store
