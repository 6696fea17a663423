"""Shared test utilities: invariant checks and random-instance generators."""

from __future__ import annotations

import random
from pathlib import Path

from readlevel.models import GradeModel
from readlevel.trees import ParseTree

FIXTURE_PATH = Path(__file__).resolve().parent.parent / "fixtures" / "appendix_scores.csv"

NORMALIZATION_TOL = 1e-9


def assert_normalized(model: GradeModel, tol: float = NORMALIZATION_TOL) -> None:
    """In-vocabulary smoothed mass plus the OOV reserve must sum to 1."""
    for grade in model.grades:
        mass = sum(model.smoothed_prob(w, grade) for w in model.vocabulary) + model.oov_mass
        assert abs(mass - 1.0) <= tol, f"grade {grade}: smoothed mass {mass!r}"


def random_word_corpus(
    rng: random.Random,
    max_grades: int = 3,
    max_word_types: int = 10,
    max_docs_per_grade: int = 3,
    max_doc_len: int = 5,
) -> list[tuple[list[str], int]]:
    """Small random (tokens, grade) corpus for oracle-equivalence checks."""
    n_grades = rng.randint(2, max_grades)
    grades = sorted(rng.sample(range(1, 13), n_grades))
    vocab = [f"w{i}" for i in range(rng.randint(2, max_word_types))]
    corpus = []
    for grade in grades:
        for _ in range(rng.randint(1, max_docs_per_grade)):
            corpus.append(([rng.choice(vocab) for _ in range(rng.randint(1, max_doc_len))], grade))
    return corpus


def random_feature_doc(rng: random.Random, corpus, max_len: int = 5, oov_rate: float = 0.2) -> list[str]:
    """A short scoring document drawn from corpus vocabulary plus OOV noise."""
    vocab = sorted({w for tokens, _ in corpus for w in tokens})
    doc = []
    for _ in range(rng.randint(1, max_len)):
        if rng.random() < oov_rate:
            doc.append(f"oov{rng.randint(0, 3)}")
        else:
            doc.append(rng.choice(vocab))
    return doc


_LABELS = ["S", "NP", "VP", "PP", "SBAR", "ADJP", "ADVP"]
_POS = ["DT", "NN", "VBD", "JJ", "IN", "RB", "PRP"]
_TOKENS = ["the", "dog", "ran", "big", "over", "fast", "it", "cat", "slept"]


def random_tree(rng: random.Random, max_depth: int = 4) -> ParseTree:
    """Random constituency tree with 1-3 children per phrase node."""

    def node(depth: int) -> ParseTree:
        if depth >= max_depth or rng.random() < 0.35:
            return ParseTree(rng.choice(_POS), (rng.choice(_TOKENS),))
        children = tuple(node(depth + 1) for _ in range(rng.randint(1, 3)))
        return ParseTree(rng.choice(_LABELS), children)

    children = tuple(node(1) for _ in range(rng.randint(1, 3)))
    return ParseTree("S", children)


def relabel_leaves(tree: ParseTree, rng: random.Random) -> ParseTree:
    """Same structure, every word leaf replaced with a random other token."""
    children = tuple(
        rng.choice(_TOKENS) + "x" if isinstance(c, str) else relabel_leaves(c, rng)
        for c in tree.children
    )
    return ParseTree(tree.label, children)
