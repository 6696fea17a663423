"""Deterministic text segmentation and counting primitives.

Everything downstream (formulas, lexical model, corpus pipeline) consumes
the word/sentence units produced here, so the rules are intentionally
simple and fixed: sentences end at ``. ! ?`` followed by whitespace (with
an abbreviation list suppressing false splits), tokens are maximal runs of
letters/digits with internal apostrophes or hyphens, lowercased.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator

from .errors import EncodingError, InvalidTokenError

_TERMINATORS = ".!?"
# Unicode letters/digits (no underscore), with internal ' or - allowed.
_TOKEN_RE = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*", re.UNICODE)
_VOWELS = frozenset("aeiouy")
_GROUP_RE = re.compile(r"[aeiouy]+|[0-9]+")


@dataclass(frozen=True)
class RawDocument:
    """A document as ingested: raw text plus an opaque identifier."""

    text: str
    id: str = "doc"

    def __post_init__(self):
        if not self.id:
            raise ValueError("document id must be non-empty")


@dataclass(frozen=True)
class TokenizedDocument:
    """Sentences of lowercased word tokens, punctuation stripped."""

    sentences: tuple[tuple[str, ...], ...]

    @property
    def sentence_count(self) -> int:
        return len(self.sentences)

    @property
    def token_count(self) -> int:
        return sum(len(s) for s in self.sentences)

    def tokens(self) -> Iterator[str]:
        for sentence in self.sentences:
            yield from sentence


def load_abbreviations(path: str | Path) -> frozenset[str]:
    """Read an abbreviation list: one entry per line, ``#`` comments allowed.

    Entries are lowercased and trailing periods dropped, so ``Mr.`` and
    ``mr`` are the same entry; internal periods (``u.s``) are kept.
    """
    text = read_text_file(path)
    entries = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            entries.add(line.lower().rstrip("."))
    return frozenset(entries)


@lru_cache(maxsize=1)
def default_abbreviations() -> frozenset[str]:
    """The bundled honorific list (mr, mrs, dr, u.s, ...)."""
    text = resources.files("readlevel").joinpath("data/abbreviations.txt").read_text("utf-8")
    entries = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            entries.add(line.lower().rstrip("."))
    return frozenset(entries)


def read_text_file(path: str | Path) -> str:
    """Read a UTF-8 text file, mapping bad bytes to EncodingError."""
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"{path} is not valid UTF-8: {exc}") from None


def _preceding_chunk(text: str, end: int) -> str:
    # The word-ish run immediately before text[end]; may contain internal
    # periods ("U.S") so multi-part abbreviations survive the walk-back.
    j = end - 1
    while j >= 0 and (text[j].isalnum() or text[j] in ".'’-"):
        j -= 1
    return text[j + 1 : end]


def _sentence_segments(text: str, abbreviations: frozenset[str]) -> list[str]:
    segments: list[str] = []
    start = 0
    n = len(text)
    for i, ch in enumerate(text):
        if ch not in _TERMINATORS:
            continue
        if i + 1 < n and not text[i + 1].isspace():
            continue
        if ch == "." and _preceding_chunk(text, i).lower().strip(".") in abbreviations:
            continue
        segments.append(text[start : i + 1])
        start = i + 1
    if start < n:
        segments.append(text[start:])
    return segments


def tokenize(
    doc: RawDocument | str | bytes,
    abbreviations: Iterable[str] | None = None,
) -> TokenizedDocument:
    """Segment a document into sentences of lowercased tokens.

    Sentence boundaries sit at ``. ! ?`` followed by whitespace or end of
    text; a period is not a boundary when the word before it is in the
    abbreviation list (bundled honorifics by default). Tokens are maximal
    runs of letters/digits with internal apostrophes/hyphens, so
    hyphenated compounds stay single tokens. Curly apostrophes are
    normalized to ``'``. Segments containing no tokens are dropped, which
    also means terminator-free trailing text still counts as a sentence.
    """
    if isinstance(doc, RawDocument):
        text = doc.text
    elif isinstance(doc, bytes):
        try:
            text = doc.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EncodingError(f"input is not valid UTF-8: {exc}") from None
    else:
        text = doc
    if abbreviations is None:
        abbrevs = default_abbreviations()
    else:
        abbrevs = frozenset(a.lower().rstrip(".") for a in abbreviations)

    sentences = []
    for segment in _sentence_segments(text, abbrevs):
        tokens = tuple(
            m.group(0).lower().replace("’", "'") for m in _TOKEN_RE.finditer(segment)
        )
        if tokens:
            sentences.append(tokens)
    return TokenizedDocument(sentences=tuple(sentences))


def count_syllables(word: str) -> int:
    """Heuristic syllable count for one token.

    Counts maximal vowel groups (a e i o u y) plus one per digit group,
    subtracts a silent terminal "e" unless the word ends in consonant+"le"
    (ta-ble), and clamps to a minimum of 1. Pure heuristic: per-word errors
    wash out at document scale. Swap in a hyphenation-dictionary counter
    via the ``syllable_counter`` argument of :func:`document_counts` if
    exact counts matter.
    """
    word = word.lower()
    if not any(c.isalnum() for c in word):
        raise InvalidTokenError(f"cannot count syllables of {word!r}: no letters or digits")
    count = len(_GROUP_RE.findall(word))  # vowel-less words like "hmm" clamp to 1 below
    if word.endswith("e") and not _ends_consonant_le(word):
        count -= 1
    return max(count, 1)


def _ends_consonant_le(word: str) -> bool:
    if len(word) < 3 or not word.endswith("le"):
        return False
    before = word[-3]
    return before.isalpha() and before not in _VOWELS


def document_counts(
    doc: TokenizedDocument,
    syllable_counter=count_syllables,
) -> tuple[int, int, int]:
    """(words, sentences, syllables) for a tokenized document.

    Text with tokens but no terminator already forms one trailing
    sentence, so the sentence count is never 0 while words exist.
    """
    words = doc.token_count
    sentences = doc.sentence_count
    syllables = sum(syllable_counter(token) for token in doc.tokens())
    return words, sentences, syllables
