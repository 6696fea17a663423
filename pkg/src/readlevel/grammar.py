"""Grammar grade estimator: per-grade multinomial models over subtree patterns.

Same statistical core as the lexical estimator, but the features are
depth-1..3 parse-subtree patterns instead of words, and the headline
output is the real-valued posterior-weighted expected grade rather than
an integer MAP grade.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, Sequence

from . import models
from .errors import EmptyEvidenceError, InvalidEntryError
from .models import GradeModel
from .trees import ParseTree, document_patterns, read_tree_file

_GRADE_DIR_RE = re.compile(r"^grade-(\d{1,2})$")

TreeCorpus = list[tuple[list[ParseTree], int]]


def load_tree_corpus_files(pairs: Iterable[tuple[str | Path, int]]) -> TreeCorpus:
    """Read (tree-file, grade) pairs; parse errors carry file and line."""
    return [(read_tree_file(path), grade) for path, grade in pairs]


def load_tree_corpus_dir(path: str | Path) -> TreeCorpus:
    """Directory layout: grade-01 ... grade-12 subdirectories of tree files."""
    root = Path(path)
    pairs = []
    for sub in sorted(root.iterdir()):
        match = _GRADE_DIR_RE.match(sub.name)
        if not match or not sub.is_dir():
            continue
        grade = int(match.group(1))
        pairs.extend((file, grade) for file in sorted(sub.iterdir()) if file.is_file())
    if not pairs:
        raise InvalidEntryError(f"{path}: no grade-NN subdirectories with tree files")
    return load_tree_corpus_files(pairs)


def train_grammar(
    corpus: TreeCorpus,
    smoothing_lambda: float = 0.9,
    oov_mass: float = 1e-4,
    unseen_vocab_factor: float = 10.0,
    proportional_priors: bool = False,
    binary_features: bool = False,
) -> GradeModel:
    """Tabulate subtree-pattern counts per grade into a smoothed model.

    ``binary_features`` counts each pattern at most once per sentence; the
    flag is recorded in the model so scoring uses the same convention.
    """
    return models.train(
        ((document_patterns(trees, binary_features), grade) for trees, grade in corpus),
        feature_kind=models.FEATURE_KIND_SUBTREE,
        smoothing_lambda=smoothing_lambda,
        oov_mass=oov_mass,
        unseen_vocab_factor=unseen_vocab_factor,
        proportional_priors=proportional_priors,
        binary_features=binary_features,
    )


def grammar_grade(model: GradeModel, trees: Sequence[ParseTree]) -> float:
    """Posterior-weighted expected grade of a document's parse trees."""
    patterns = document_patterns(trees, model.binary_features)
    if not patterns:
        raise EmptyEvidenceError("no extractable patterns in the given trees")
    return model.expected_grade(patterns)
