"""Corpus manifest ingestion, batch scoring, and aggregate analyses.

A manifest CSV lists one speech per row (speaker, date, occasion, input
paths). Scoring produces one ScoreRecord per row in manifest order;
scorers that lack their input leave the field absent and log a warning
rather than failing the run. Aggregation computes per-speaker mean and
sample (n-1) standard deviation; occasion filtering and per-speaker time
series support the announcement-speech comparison and evolution-over-time
views.

Scores CSVs round-trip through :func:`load_scores` / :func:`write_scores`
with dates ISO-normalized, so a pre-scored table (like the shipped
fixture) can be re-emitted byte-deterministically without any models.
"""

from __future__ import annotations

import csv
import logging
import statistics
from dataclasses import dataclass, replace
from datetime import date, datetime
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from . import formulas, grammar as grammar_mod, lexical as lexical_mod
from .errors import EmptyDocumentError, EmptyEvidenceError, ManifestError, ReadlevelError
from .formulas import EasyWordList
from .models import GRADE_MAX, GRADE_MIN, GradeModel
from .textcore import read_text_file, tokenize
from .trees import read_tree_file

logger = logging.getLogger(__name__)

MANIFEST_COLUMNS = ("speaker", "date", "occasion", "text_path", "trees_path")
SCORE_COLUMNS = ("speaker", "date", "occasion", "lexical", "grammar", "fk", "dale_chall")
_REQUIRED_COLUMNS = ("speaker", "date", "occasion")


@dataclass(frozen=True)
class ManifestEntry:
    speaker: str
    date: date
    occasion: str
    text_path: Path | None = None
    trees_path: Path | None = None


@dataclass(frozen=True)
class ScoreRecord:
    """One speech's measurements; absent scores stay None."""

    speaker: str
    date: date
    occasion: str
    lexical: int | None = None
    grammar: float | None = None
    fk: float | None = None
    dale_chall: float | None = None

    def __post_init__(self):
        if self.lexical is not None and not GRADE_MIN <= self.lexical <= GRADE_MAX:
            raise ValueError(f"lexical grade {self.lexical} outside [1, 12]")
        if self.grammar is not None and not GRADE_MIN <= self.grammar <= GRADE_MAX:
            raise ValueError(f"grammar grade {self.grammar} outside [1, 12]")


@dataclass(frozen=True)
class AggregateStats:
    group_key: str
    mean: float
    sd: float | None  # absent when n == 1
    n: int


class TimePoint(NamedTuple):
    date: date
    lexical: int | None
    grammar: float | None


def parse_record_date(value: str) -> date:
    """Accept M/D/YYYY or ISO YYYY-MM-DD."""
    value = value.strip()
    if "/" in value:
        return datetime.strptime(value, "%m/%d/%Y").date()
    return date.fromisoformat(value)


def _open_csv(path: str | Path, required: Sequence[str]) -> tuple[list[dict], list[str]]:
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            reader = csv.DictReader(handle)
            fields = reader.fieldnames or []
            for column in required:
                if column not in fields:
                    raise ManifestError(f"{path}: missing required column {column!r}")
            rows = [(reader.line_num, row) for row in reader]
    except OSError as exc:
        raise ManifestError(f"cannot read {path}: {exc}") from None
    except UnicodeDecodeError as exc:
        raise ManifestError(f"{path} is not valid UTF-8: {exc}") from None
    return rows, fields


def load_manifest(path: str | Path) -> list[ManifestEntry]:
    """Read a manifest CSV; file order preserved.

    ``text_path``/``trees_path`` columns are optional and may be empty
    (the pre-scored fixture has neither); relative paths resolve against
    the manifest's directory.
    """
    base = Path(path).parent
    rows, _ = _open_csv(path, _REQUIRED_COLUMNS)
    entries = []
    for line_num, row in rows:
        try:
            entry_date = parse_record_date(row["date"])
        except ValueError as exc:
            raise ManifestError(f"{path}:{line_num}: bad date {row['date']!r}: {exc}") from None
        speaker = (row["speaker"] or "").strip()
        occasion = (row["occasion"] or "").strip()
        if not speaker or not occasion:
            raise ManifestError(f"{path}:{line_num}: speaker and occasion must be non-empty")
        entries.append(
            ManifestEntry(
                speaker=speaker,
                date=entry_date,
                occasion=occasion,
                text_path=_resolve(base, row.get("text_path")),
                trees_path=_resolve(base, row.get("trees_path")),
            )
        )
    return entries


def _resolve(base: Path, value: str | None) -> Path | None:
    if not value or not value.strip():
        return None
    p = Path(value.strip())
    return p if p.is_absolute() else base / p


def is_scores_csv(path: str | Path) -> bool:
    """True when the CSV header carries score columns (pass-through input)."""
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            fields = next(csv.reader(handle), [])
    except (OSError, UnicodeDecodeError) as exc:
        raise ManifestError(f"cannot read {path}: {exc}") from None
    return "lexical" in fields or "grammar" in fields


def load_scores(path: str | Path) -> list[ScoreRecord]:
    """Read a (possibly partial) scores CSV into ScoreRecords."""
    rows, fields = _open_csv(path, _REQUIRED_COLUMNS)
    records = []
    for line_num, row in rows:
        try:
            records.append(
                ScoreRecord(
                    speaker=row["speaker"].strip(),
                    date=parse_record_date(row["date"]),
                    occasion=row["occasion"].strip(),
                    lexical=_parse_opt(row, "lexical", int, fields),
                    grammar=_parse_opt(row, "grammar", float, fields),
                    fk=_parse_opt(row, "fk", float, fields),
                    dale_chall=_parse_opt(row, "dale_chall", float, fields),
                )
            )
        except ValueError as exc:
            raise ManifestError(f"{path}:{line_num}: {exc}") from None
    return records


def _parse_opt(row: dict, column: str, kind, fields: list[str]):
    if column not in fields:
        return None
    value = (row.get(column) or "").strip()
    if not value:
        return None
    return kind(value)


def _format_value(value) -> str:
    if value is None:
        return ""
    return repr(value) if isinstance(value, float) else str(value)


def write_scores(records: Iterable[ScoreRecord], path: str | Path) -> None:
    """Emit the scores CSV: ISO dates, empty string for absent values."""
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SCORE_COLUMNS)
        for r in records:
            writer.writerow(
                [
                    r.speaker,
                    r.date.isoformat(),
                    r.occasion,
                    _format_value(r.lexical),
                    _format_value(r.grammar),
                    _format_value(r.fk),
                    _format_value(r.dale_chall),
                ]
            )


def score_corpus(
    entries: Sequence[ManifestEntry],
    lexical_model: GradeModel | None = None,
    grammar_model: GradeModel | None = None,
    easy_words: EasyWordList | None = None,
    abbreviations: Iterable[str] | None = None,
    compute_formulas: bool = True,
) -> list[ScoreRecord]:
    """Score every manifest entry with whatever scorers have inputs.

    One record per entry, in manifest order. A scorer whose input is
    missing or unreadable logs a warning and leaves its field absent; the
    run always completes.
    """
    records = []
    for entry in entries:
        doc = None
        if entry.text_path is not None and (lexical_model is not None or compute_formulas):
            try:
                doc = tokenize(read_text_file(entry.text_path), abbreviations)
            except (OSError, ReadlevelError) as exc:
                logger.warning("%s (%s): cannot read text: %s", entry.speaker, entry.date, exc)

        lexical_grade = None
        fk_value = None
        dc_value = None
        if lexical_model is not None:
            lexical_grade = _try_score(
                entry, "lexical", lambda: lexical_mod.classify_map(lexical_model, doc), doc
            )
        if compute_formulas:
            fk_value = _try_score(
                entry, "fk", lambda: formulas.flesch_kincaid_document(doc).value, doc
            )
            dc_value = _try_score(
                entry,
                "dale_chall",
                lambda: formulas.dale_chall_document(doc, easy_words).value,
                doc,
            )

        grammar_value = None
        if grammar_model is not None:
            if entry.trees_path is None:
                logger.warning("%s (%s): grammar requested but no trees_path", entry.speaker, entry.date)
            else:
                try:
                    sentence_trees = read_tree_file(entry.trees_path)
                    grammar_value = grammar_mod.grammar_grade(grammar_model, sentence_trees)
                except (OSError, ReadlevelError) as exc:
                    logger.warning("%s (%s): grammar scoring failed: %s", entry.speaker, entry.date, exc)

        records.append(
            ScoreRecord(
                speaker=entry.speaker,
                date=entry.date,
                occasion=entry.occasion,
                lexical=lexical_grade,
                grammar=grammar_value,
                fk=fk_value,
                dale_chall=dc_value,
            )
        )
    return records


def _try_score(entry: ManifestEntry, name: str, scorer, doc):
    if doc is None:
        if entry.text_path is None:
            logger.warning("%s (%s): %s requested but no text_path", entry.speaker, entry.date, name)
        return None
    try:
        return scorer()
    except (EmptyDocumentError, EmptyEvidenceError) as exc:
        logger.warning("%s (%s): %s scoring failed: %s", entry.speaker, entry.date, name, exc)
        return None


def aggregate(records: Sequence[ScoreRecord], column: str) -> list[AggregateStats]:
    """Per-speaker mean and sample standard deviation of one score column.

    Records missing the column do not count toward that speaker's n; a
    speaker with no values at all is skipped with a warning. Groups come
    back sorted by speaker name. The sd uses the n-1 divisor and is absent
    for single-record groups.
    """
    if column not in ("lexical", "grammar", "fk", "dale_chall"):
        raise ValueError(f"unknown score column {column!r}")
    groups: dict[str, list[float]] = {}
    for record in records:
        value = getattr(record, column)
        groups.setdefault(record.speaker, [])
        if value is not None:
            groups[record.speaker].append(value)
    stats = []
    for speaker in sorted(groups):
        values = groups[speaker]
        if not values:
            logger.warning("speaker %s has no %s values; skipped", speaker, column)
            continue
        sd = statistics.stdev(values) if len(values) > 1 else None
        stats.append(AggregateStats(group_key=speaker, mean=statistics.mean(values), sd=sd, n=len(values)))
    return stats


def filter_occasion(records: Sequence[ScoreRecord], substring: str) -> list[ScoreRecord]:
    """Records whose occasion contains the substring, case-insensitively."""
    needle = substring.lower()
    return [r for r in records if needle in r.occasion.lower()]


def time_series(records: Sequence[ScoreRecord], speaker: str) -> list[TimePoint]:
    """One speaker's scores sorted by date (ties by occasion, stable)."""
    selected = sorted(
        (r for r in records if r.speaker == speaker),
        key=lambda r: (r.date, r.occasion),
    )
    return [TimePoint(r.date, r.lexical, r.grammar) for r in selected]


# The source table prints one Sanders row dated 2/20/2015 amid an
# otherwise-2016 Nevada sequence; we ship it verbatim and only shift it
# when explicitly asked to.
_SUSPECT_DATE = date(2015, 2, 20)
_SUSPECT_OCCASION = "nevada election night"


def apply_assume_2016(records: Sequence[ScoreRecord]) -> list[ScoreRecord]:
    """Move the suspect 2/20/2015 Nevada election-night row to 2016."""
    corrected = []
    for r in records:
        if r.date == _SUSPECT_DATE and _SUSPECT_OCCASION in r.occasion.lower():
            r = replace(r, date=date(2016, 2, 20))
        corrected.append(r)
    return corrected
