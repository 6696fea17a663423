"""Classic closed-form readability formulas.

Flesch-Kincaid grade level (Kincaid et al., 1975):

    0.39 * (words / sentences) + 11.8 * (syllables / words) - 15.59

Dale-Chall score (Dale & Chall, 1948), with the conventional adjustment
applied only when more than 5% of words are outside the easy-word list:

    0.1579 * pct_difficult + 0.0496 * (words / sentences)  [+ 3.6365]

The constants are hard-coded from those two references. Raw values are
never clamped here; banding to the 1-12 grade scale is a display concern.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import EmptyDocumentError, InconsistentCountsError
from .textcore import TokenizedDocument, count_syllables, document_counts, read_text_file

FK_SENTENCE_WEIGHT = 0.39
FK_SYLLABLE_WEIGHT = 11.8
FK_OFFSET = 15.59
DC_DIFFICULT_WEIGHT = 0.1579
DC_SENTENCE_WEIGHT = 0.0496
DC_ADJUSTMENT = 3.6365
DC_ADJUSTMENT_THRESHOLD = 5.0  # percent difficult; strictly above applies it


class Formula(str, Enum):
    FLESCH_KINCAID = "flesch_kincaid"
    DALE_CHALL = "dale_chall"


@dataclass(frozen=True)
class FormulaInputs:
    words: int
    sentences: int
    syllables: int = 0
    pct_difficult: float = 0.0


@dataclass(frozen=True)
class FormulaScore:
    value: float
    formula: Formula
    inputs: FormulaInputs


@dataclass(frozen=True)
class EasyWordList:
    """Membership set defining which words are NOT difficult."""

    words: frozenset[str]
    name: str

    def __post_init__(self):
        if not self.words:
            raise ValueError("easy-word list must be non-empty")


def flesch_kincaid(words: int, sentences: int, syllables: int) -> FormulaScore:
    """Flesch-Kincaid grade level from raw counts, unclamped."""
    if words <= 0 or sentences <= 0:
        raise EmptyDocumentError("Flesch-Kincaid needs at least one word and one sentence")
    value = (
        FK_SENTENCE_WEIGHT * (words / sentences)
        + FK_SYLLABLE_WEIGHT * (syllables / words)
        - FK_OFFSET
    )
    return FormulaScore(
        value=value,
        formula=Formula.FLESCH_KINCAID,
        inputs=FormulaInputs(words=words, sentences=sentences, syllables=syllables),
    )


def dale_chall(words: int, sentences: int, difficult_words: int) -> FormulaScore:
    """Dale-Chall score from raw counts.

    The 3.6365 adjustment kicks in strictly above 5% difficult words;
    exactly 5% stays unadjusted.
    """
    if words <= 0 or sentences <= 0:
        raise EmptyDocumentError("Dale-Chall needs at least one word and one sentence")
    if difficult_words < 0 or difficult_words > words:
        raise InconsistentCountsError(
            f"difficult_words={difficult_words} outside [0, words={words}]"
        )
    pct = 100.0 * difficult_words / words
    value = DC_DIFFICULT_WEIGHT * pct + DC_SENTENCE_WEIGHT * (words / sentences)
    if pct > DC_ADJUSTMENT_THRESHOLD:
        value += DC_ADJUSTMENT
    return FormulaScore(
        value=value,
        formula=Formula.DALE_CHALL,
        inputs=FormulaInputs(words=words, sentences=sentences, pct_difficult=pct),
    )


def count_difficult(doc: TokenizedDocument, easy_words: EasyWordList) -> int:
    """Tokens (with multiplicity) not present in the easy-word list."""
    members = easy_words.words
    return sum(1 for token in doc.tokens() if token not in members)


def load_easy_words(path: str | Path) -> EasyWordList:
    """Load an easy-word list file: one lowercase word per line."""
    words = frozenset(
        line.strip().lower() for line in read_text_file(path).splitlines() if line.strip()
    )
    return EasyWordList(words=words, name=str(path))


@lru_cache(maxsize=1)
def default_easy_words() -> EasyWordList:
    """The bundled frequency-based common-word list (~3000 entries)."""
    text = resources.files("readlevel").joinpath("data/easy_words.txt").read_text("utf-8")
    words = frozenset(line.strip() for line in text.splitlines() if line.strip())
    return EasyWordList(words=words, name="bundled-easy-words")


def bundled_easy_words_sha256() -> str:
    """Checksum of the bundled list, for pinning in tests."""
    data = resources.files("readlevel").joinpath("data/easy_words.txt").read_bytes()
    return hashlib.sha256(data).hexdigest()


def flesch_kincaid_document(doc: TokenizedDocument) -> FormulaScore:
    words, sentences, syllables = document_counts(doc, count_syllables)
    return flesch_kincaid(words, sentences, syllables)


def dale_chall_document(doc: TokenizedDocument, easy_words: EasyWordList | None = None) -> FormulaScore:
    easy = easy_words if easy_words is not None else default_easy_words()
    words = doc.token_count
    sentences = doc.sentence_count
    return dale_chall(words, sentences, count_difficult(doc, easy))
