import json
import logging

import pytest

from stub_server import StubServer
from zsdst.backend import (
    BackendConfig,
    BackendConfigError,
    BackendError,
    FaultBackend,
    RemoteBackend,
    ReplayBackend,
    ReplayMissing,
    RetriesExhausted,
    TokenBucket,
    TranscriptEntry,
    TranscriptStore,
    persist_transcript,
)
from zsdst.prompting import TurnMessage

SECRET = "sk-test-7f3a9c-not-a-real-key"


class FakeClock:
    def __init__(self):
        self.now = 0.0
        self.sleeps = []

    def __call__(self):
        return self.now

    def sleep(self, dt):
        self.sleeps.append(dt)
        self.now += dt


def remote(url, **overrides):
    cfg = BackendConfig(**{"endpoint_url": url, "retry_base_delay": 0.5, "timeout": 5.0, **overrides})
    sleeps = []
    backend = RemoteBackend(cfg, sleep=sleeps.append, limiter=TokenBucket(1e6, capacity=1e6, sleep=lambda s: None))
    return backend, sleeps


def msg(t, text=None):
    return TurnMessage(text or f"turn {t}", t, "initial" if t == 1 else "followup")


@pytest.fixture
def api_key(monkeypatch):
    monkeypatch.setenv("DST_API_KEY", SECRET)


def test_roles_alternate_and_history_grows(api_key):
    with StubServer([(200, lambda body: f"reply {len(body['messages'])}")]) as stub:
        backend, _ = remote(stub.url)
        session = backend.open_session("D1")
        replies = [session.send(msg(t)) for t in (1, 2, 3)]
    assert replies == ["reply 1", "reply 3", "reply 5"]
    roles = [m["role"] for m in stub.requests[-1]["body"]["messages"]]
    assert roles == ["user", "assistant", "user", "assistant", "user"]
    assert [m["content"] for m in stub.requests[-1]["body"]["messages"]][::2] == ["turn 1", "turn 2", "turn 3"]
    body = stub.requests[0]["body"]
    assert body["model"] == "gpt-3.5-turbo" and body["temperature"] == 0.0
    assert stub.requests[0]["headers"]["Authorization"] == f"Bearer {SECRET}"


def test_transient_errors_back_off_exponentially(api_key):
    with StubServer([(429, ""), (503, ""), (502, ""), (200, "ok")]) as stub:
        backend, sleeps = remote(stub.url)
        assert backend.open_session("D").send(msg(1)) == "ok"
    assert len(stub.requests) == 4
    assert sleeps == [0.5, 1.0, 2.0]


def test_max_retries_is_honored(api_key):
    with StubServer([(500, "")]) as stub:
        backend, sleeps = remote(stub.url, max_retries=3)
        session = backend.open_session("D")
        with pytest.raises(RetriesExhausted):
            session.send(msg(1))
    assert len(stub.requests) == 4
    assert sleeps == [0.5, 1.0, 2.0]
    assert session.history == [] and session.exchanges == []


def test_client_errors_are_not_retried(api_key):
    with StubServer([(400, "")]) as stub:
        backend, sleeps = remote(stub.url)
        with pytest.raises(BackendError, match="400"):
            backend.open_session("D").send(msg(1))
    assert len(stub.requests) == 1 and sleeps == []


def test_timeouts_are_retried(api_key):
    with StubServer([("sleep", 1.0), (200, "late but fine")]) as stub:
        backend, sleeps = remote(stub.url, timeout=0.2)
        assert backend.open_session("D").send(msg(1)) == "late but fine"
    assert sleeps == [0.5]


def test_missing_credential(monkeypatch):
    monkeypatch.delenv("DST_API_KEY", raising=False)
    backend, _ = remote("http://127.0.0.1:9/unused")
    with pytest.raises(BackendConfigError, match="DST_API_KEY"):
        backend.open_session("D")


def test_credential_not_persisted(api_key, tmp_path):
    with StubServer([(200, '{"hotel-area": "north"}')]) as stub:
        backend, _ = remote(stub.url)
        session = backend.open_session("D")
        session.send(msg(1))
        session.send(msg(2))
    path = tmp_path / "transcript.jsonl"
    persist_transcript(session, path)
    text = path.read_text(encoding="utf-8")
    assert SECRET not in text and len(text.splitlines()) == 2
    assert SECRET not in repr(backend.config)


def test_config_validation():
    with pytest.raises(BackendConfigError):
        BackendConfig(max_retries=-1)
    with pytest.raises(BackendConfigError):
        BackendConfig(rate_limit=0)


def test_token_bucket_spaces_requests():
    clock = FakeClock()
    bucket = TokenBucket(60, capacity=1, clock=clock, sleep=clock.sleep)
    for _ in range(3):
        bucket.acquire()
    assert clock.sleeps == [pytest.approx(1.0), pytest.approx(1.0)]


def test_out_of_order_send():
    session = FaultBackend({"D": ["a", "b"]}).open_session("D")
    with pytest.raises(BackendError, match="out-of-order"):
        session.send(msg(2))


def test_transcript_store(tmp_path):
    store = TranscriptStore()
    store.add(TranscriptEntry("D", 1, "p1", "r1", "m"))
    store.add(TranscriptEntry("D", 2, "p2", "r2", "m"))
    with pytest.raises(ValueError, match="duplicate"):
        store.add(TranscriptEntry("D", 1, "p", "r"))
    path = tmp_path / "s.jsonl"
    store.dump(path)
    assert TranscriptStore.load(path) == store
    assert store.model_versions == {"m"} and store.turn_count("D") == 2
    with pytest.raises(ReplayMissing):
        store.response("D", 3)


def test_replay_session(caplog):
    store = TranscriptStore()
    store.add(TranscriptEntry("D", 1, "recorded prompt", "r1", "m", "2023-01-01T00:00:00+00:00"))
    backend = ReplayBackend(store)
    with pytest.raises(BackendError):
        backend.open_session("other")
    session = backend.open_session("D")
    with caplog.at_level(logging.WARNING):
        assert session.send(msg(1, "different prompt")) == "r1"
    assert "differs" in caplog.text
    assert session.exchanges[0].timestamp == "2023-01-01T00:00:00+00:00"
    with pytest.raises(ReplayMissing):
        session.send(msg(2))


def test_fault_script_loading(tmp_path):
    path = tmp_path / "faults.json"
    path.write_text(json.dumps({"D": ["{}", {"error": "boom"}]}), encoding="utf-8")
    session = FaultBackend.load(path).open_session("D")
    assert session.send(msg(1)) == "{}"
    with pytest.raises(BackendError, match="boom"):
        session.send(msg(2))
