"""Paths to bundled data files."""
from __future__ import annotations

from pathlib import Path

DATA_DIR = Path(__file__).parent / "data"
FIXTURES_DIR = DATA_DIR / "fixtures"

SCHEMA = DATA_DIR / "multiwoz_schema.json"
REQUESTABLES = DATA_DIR / "requestables.json"
PROMPT_TEMPLATE = DATA_DIR / "prompt_template.txt"
VALUE_NORMALIZATION = DATA_DIR / "value_normalization.json"
VALUE_VARIANTS = DATA_DIR / "value_variants.json"
EMPTINESS_PHRASES = DATA_DIR / "emptiness_phrases.txt"
GENERIC_REFERENTS = DATA_DIR / "generic_referents.txt"
REFERENCE_NUMBERS = DATA_DIR / "reference_numbers.json"
DEFAULT_CONFIG = DATA_DIR / "default.ini"
SUPPLEMENTARY_CONFIG = DATA_DIR / "supplementary.ini"

CORPUS = FIXTURES_DIR / "corpus.json"
CORPUS_EXTRA = FIXTURES_DIR / "corpus_extra.json"
TRANSCRIPTS = FIXTURES_DIR / "transcripts.jsonl"
TRANSCRIPTS_EXTRA = FIXTURES_DIR / "transcripts_extra.jsonl"
REFERENCE_PROMPT = FIXTURES_DIR / "reference_prompt.txt"
PUBLISHED_PREDICTIONS = FIXTURES_DIR / "published_predictions.json"


def read_lines(path) -> list[str]:
    """Non-empty, non-comment lines of a plain-text list file."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
