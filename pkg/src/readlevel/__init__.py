"""readlevel: reading grade-level analysis for text corpora.

Classic readability formulas (Flesch-Kincaid, Dale-Chall), per-grade
smoothed unigram lexical models, parse-subtree grammar models, and a
manifest-driven pipeline with per-speaker aggregates, figures, and CSV
reports.
"""

__version__ = "0.1.0"

from .errors import (
    DegenerateCorpusError,
    EmptyDocumentError,
    EmptyEvidenceError,
    EncodingError,
    InconsistentCountsError,
    InvalidEntryError,
    InvalidTokenError,
    ManifestError,
    ModelFormatError,
    ReadlevelError,
    TreeParseError,
)
from .formulas import (
    EasyWordList,
    Formula,
    FormulaScore,
    count_difficult,
    dale_chall,
    default_easy_words,
    flesch_kincaid,
    load_easy_words,
)
from .grammar import grammar_grade, train_grammar
from .lexical import classify_map, expected_grade, log_likelihoods, train_lexical
from .models import GradeModel
from .pipeline import (
    AggregateStats,
    ManifestEntry,
    ScoreRecord,
    aggregate,
    filter_occasion,
    load_manifest,
    load_scores,
    score_corpus,
    time_series,
    write_scores,
)
from .textcore import (
    RawDocument,
    TokenizedDocument,
    count_syllables,
    document_counts,
    tokenize,
)
from .trees import ParseTree, extract_subtrees, parse_ptb, read_tree_file, serialize

__all__ = [
    "__version__",
    "AggregateStats",
    "DegenerateCorpusError",
    "EasyWordList",
    "EmptyDocumentError",
    "EmptyEvidenceError",
    "EncodingError",
    "Formula",
    "FormulaScore",
    "GradeModel",
    "InconsistentCountsError",
    "InvalidEntryError",
    "InvalidTokenError",
    "ManifestError",
    "ManifestEntry",
    "ModelFormatError",
    "ParseTree",
    "RawDocument",
    "ReadlevelError",
    "ScoreRecord",
    "TokenizedDocument",
    "TreeParseError",
    "aggregate",
    "classify_map",
    "count_difficult",
    "count_syllables",
    "dale_chall",
    "default_easy_words",
    "document_counts",
    "expected_grade",
    "extract_subtrees",
    "filter_occasion",
    "flesch_kincaid",
    "grammar_grade",
    "load_easy_words",
    "load_manifest",
    "load_scores",
    "log_likelihoods",
    "parse_ptb",
    "read_tree_file",
    "score_corpus",
    "serialize",
    "time_series",
    "tokenize",
    "train_grammar",
    "train_lexical",
    "write_scores",
]
