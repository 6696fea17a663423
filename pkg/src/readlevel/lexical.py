"""Lexical grade estimator: per-grade smoothed unigram word models.

Trained on grade-labeled text, a model scores a document by the summed
log-probability of its tokens under each grade's smoothed unigram
distribution. The integer grade is the MAP choice (ties to the lowest
grade); ``expected_grade`` gives the real-valued posterior mean as a
diagnostic companion.

Training corpora come either as JSON-lines ({"grade": int, "text": str}
per line) or as a directory of ``grade-01`` ... ``grade-12`` subdirectories
of plain-text files.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Iterable

from . import models
from .errors import EmptyDocumentError, InvalidEntryError
from .models import GradeModel
from .textcore import TokenizedDocument, read_text_file, tokenize

_GRADE_DIR_RE = re.compile(r"^grade-(\d{1,2})$")

LabeledCorpus = list[tuple[TokenizedDocument, int]]


def load_corpus_jsonl(path: str | Path, abbreviations: Iterable[str] | None = None) -> LabeledCorpus:
    """One JSON object per line: {"grade": int, "text": str}."""
    entries: LabeledCorpus = []
    for lineno, line in enumerate(read_text_file(path).splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            grade = record["grade"]
            text = record["text"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise InvalidEntryError(f"{path}:{lineno}: bad corpus line: {exc}") from None
        entries.append((tokenize(text, abbreviations), grade))
    return entries


def load_corpus_dir(path: str | Path, abbreviations: Iterable[str] | None = None) -> LabeledCorpus:
    """Directory layout: grade-01 ... grade-12 subdirectories of text files."""
    root = Path(path)
    entries: LabeledCorpus = []
    for sub in sorted(root.iterdir()):
        match = _GRADE_DIR_RE.match(sub.name)
        if not match or not sub.is_dir():
            continue
        grade = int(match.group(1))
        for file in sorted(sub.iterdir()):
            if file.is_file():
                entries.append((tokenize(read_text_file(file), abbreviations), grade))
    if not entries:
        raise InvalidEntryError(f"{path}: no grade-NN subdirectories with documents")
    return entries


def load_corpus(path: str | Path, abbreviations: Iterable[str] | None = None) -> LabeledCorpus:
    p = Path(path)
    if p.is_dir():
        return load_corpus_dir(p, abbreviations)
    return load_corpus_jsonl(p, abbreviations)


def train_lexical(
    corpus: LabeledCorpus,
    smoothing_lambda: float = 0.9,
    oov_mass: float = 1e-4,
    unseen_vocab_factor: float = 10.0,
    proportional_priors: bool = False,
) -> GradeModel:
    """Tabulate token counts per grade into a smoothed unigram model."""
    return models.train(
        ((tuple(doc.tokens()), grade) for doc, grade in corpus),
        feature_kind=models.FEATURE_KIND_WORD,
        smoothing_lambda=smoothing_lambda,
        oov_mass=oov_mass,
        unseen_vocab_factor=unseen_vocab_factor,
        proportional_priors=proportional_priors,
    )


def _doc_tokens(doc: TokenizedDocument) -> tuple[str, ...]:
    tokens = tuple(doc.tokens())
    if not tokens:
        raise EmptyDocumentError("cannot score a document with no tokens")
    return tokens


def log_likelihoods(model: GradeModel, doc: TokenizedDocument) -> dict[int, float]:
    """Per-grade log prior + summed token log-probabilities."""
    return model.log_likelihoods(_doc_tokens(doc))


def classify_map(model: GradeModel, doc: TokenizedDocument) -> int:
    """MAP grade for a document; ties break toward the lowest grade."""
    return model.classify(_doc_tokens(doc))


def expected_grade(model: GradeModel, doc: TokenizedDocument) -> float:
    """Posterior-weighted real-valued grade."""
    return model.expected_grade(_doc_tokens(doc))
