import warnings

import pytest

from helpers import replay_all
from zsdst import resources
from zsdst.backend import TranscriptStore
from zsdst.corpus import CorpusWarning, load_corpus
from zsdst.schema import load_requestables, load_schema


@pytest.fixture(scope="session")
def schema():
    return load_schema(resources.SCHEMA)


@pytest.fixture(scope="session")
def requestables(schema):
    return load_requestables(resources.REQUESTABLES, schema)


@pytest.fixture(scope="session")
def corpus():
    return load_corpus(resources.CORPUS)


@pytest.fixture(scope="session")
def extra_corpus():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CorpusWarning)
        return load_corpus(resources.CORPUS_EXTRA)


@pytest.fixture(scope="session")
def store():
    return TranscriptStore.load(resources.TRANSCRIPTS, resources.TRANSCRIPTS_EXTRA)


@pytest.fixture(scope="session")
def fixture_traces(corpus, store, schema, requestables):
    return replay_all(corpus, store, schema, requestables)


@pytest.fixture(scope="session")
def all_dialogues(corpus, extra_corpus):
    return list(corpus) + list(extra_corpus)


@pytest.fixture(scope="session")
def all_traces(all_dialogues, store, schema, requestables):
    return replay_all(all_dialogues, store, schema, requestables)
