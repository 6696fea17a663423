"""Command-line interface.

Subcommands: train-lexical, train-grammar, score, analyze, report,
formulas. Exit status contract: 0 full success, 1 partial scoring (some
requested score could not be computed), 2 input or usage errors. All
output is deterministic for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__, formulas, grammar, lexical, models, pipeline
from .errors import EmptyDocumentError, ModelFormatError, ReadlevelError
from .textcore import document_counts, load_abbreviations, read_text_file, tokenize

logger = logging.getLogger("readlevel")

EXIT_OK = 0
EXIT_PARTIAL = 1
EXIT_ERROR = 2


def _add_smoothing_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--smoothing-lambda", type=float, default=0.9,
                        help="in-grade vs background interpolation weight, in (0, 1]")
    parser.add_argument("--oov-mass", type=float, default=1e-4,
                        help="probability mass reserved for unseen features, in (0, 1)")
    parser.add_argument("--unseen-factor", type=float, default=10.0,
                        help="unseen-vocabulary size as a multiple of the trained vocabulary")
    parser.add_argument("--proportional-priors", action="store_true",
                        help="weight grade priors by training mass instead of uniformly")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="readlevel",
        description="Reading grade-level analysis: formulas, lexical/grammar models, corpus reports.",
    )
    parser.add_argument("--version", action="version", version=f"readlevel {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train-lexical", help="train a per-grade unigram word model")
    p.add_argument("corpus", help="JSONL ({'grade','text'} per line) or grade-NN directory")
    p.add_argument("--out", required=True, help="model JSON output path")
    p.add_argument("--abbrev", help="abbreviation list file for sentence splitting")
    _add_smoothing_args(p)

    p = sub.add_parser("train-grammar", help="train a per-grade subtree-pattern model")
    p.add_argument("corpus", help="directory of grade-NN subdirectories of tree files")
    p.add_argument("--out", required=True, help="model JSON output path")
    p.add_argument("--binary-features", action="store_true",
                   help="count each pattern at most once per sentence")
    _add_smoothing_args(p)

    p = sub.add_parser("score", help="score a manifest (or normalize a pre-scored CSV)")
    p.add_argument("manifest", help="manifest CSV, or a pre-scored scores CSV to pass through")
    p.add_argument("--out", required=True, help="scores CSV output path")
    p.add_argument("--lexical-model", help="trained lexical model JSON")
    p.add_argument("--grammar-model", help="trained grammar model JSON")
    p.add_argument("--easy-words", help="easy-word list file (default: bundled list)")
    p.add_argument("--abbrev", help="abbreviation list file")
    p.add_argument("--no-formulas", dest="compute_formulas", action="store_false",
                   help="skip Flesch-Kincaid and Dale-Chall scoring")

    p = sub.add_parser("analyze", help="per-speaker mean/sd table from a scores CSV")
    p.add_argument("scores", help="scores CSV")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", help="write to a file instead of standard output")
    p.add_argument("--assume-2016", action="store_true",
                   help="shift the suspect 2/20/2015 Nevada row to 2016")

    p = sub.add_parser("report", help="emit figures + data tables from a scores CSV")
    p.add_argument("scores", help="scores CSV")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--assume-2016", action="store_true",
                   help="shift the suspect 2/20/2015 Nevada row to 2016")

    p = sub.add_parser("formulas", help="Flesch-Kincaid and Dale-Chall for one text file")
    p.add_argument("text", help="UTF-8 text file")
    p.add_argument("--easy-words", help="easy-word list file (default: bundled list)")
    p.add_argument("--abbrev", help="abbreviation list file")
    p.add_argument("--json", action="store_true", help="machine-readable output")

    return parser


def _load_abbrevs(path: str | None):
    return load_abbreviations(path) if path else None


def _load_easy(path: str | None):
    return formulas.load_easy_words(path) if path else formulas.default_easy_words()


def _load_model(path: str, expected_kind: str) -> models.GradeModel:
    model = models.GradeModel.load(path)
    if model.feature_kind != expected_kind:
        raise ModelFormatError(
            f"{path}: model has feature kind {model.feature_kind!r}, expected {expected_kind!r}"
        )
    return model


def cmd_train_lexical(args) -> int:
    corpus = lexical.load_corpus(args.corpus, _load_abbrevs(args.abbrev))
    model = lexical.train_lexical(
        corpus,
        smoothing_lambda=args.smoothing_lambda,
        oov_mass=args.oov_mass,
        unseen_vocab_factor=args.unseen_factor,
        proportional_priors=args.proportional_priors,
    )
    model.save(args.out)
    print(f"trained lexical model: grades {model.grades}, "
          f"vocabulary {len(model.vocabulary)}, tokens {sum(model.totals.values())}")
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_train_grammar(args) -> int:
    corpus = grammar.load_tree_corpus_dir(args.corpus)
    model = grammar.train_grammar(
        corpus,
        smoothing_lambda=args.smoothing_lambda,
        oov_mass=args.oov_mass,
        unseen_vocab_factor=args.unseen_factor,
        proportional_priors=args.proportional_priors,
        binary_features=args.binary_features,
    )
    model.save(args.out)
    print(f"trained grammar model: grades {model.grades}, "
          f"patterns {len(model.vocabulary)}, occurrences {sum(model.totals.values())}")
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_score(args) -> int:
    if pipeline.is_scores_csv(args.manifest):
        records = pipeline.load_scores(args.manifest)
        pipeline.write_scores(records, args.out)
        print(f"normalized {len(records)} pre-scored records to {args.out}")
        return EXIT_OK

    entries = pipeline.load_manifest(args.manifest)
    lexical_model = _load_model(args.lexical_model, models.FEATURE_KIND_WORD) if args.lexical_model else None
    grammar_model = _load_model(args.grammar_model, models.FEATURE_KIND_SUBTREE) if args.grammar_model else None
    easy = _load_easy(args.easy_words) if args.compute_formulas else None
    records = pipeline.score_corpus(
        entries,
        lexical_model=lexical_model,
        grammar_model=grammar_model,
        easy_words=easy,
        abbreviations=_load_abbrevs(args.abbrev),
        compute_formulas=args.compute_formulas,
    )
    pipeline.write_scores(records, args.out)

    wanted = []
    if lexical_model is not None:
        wanted.append("lexical")
    if grammar_model is not None:
        wanted.append("grammar")
    if args.compute_formulas:
        wanted.extend(["fk", "dale_chall"])
    partial = sum(1 for r in records if any(getattr(r, col) is None for col in wanted))
    print(f"scored {len(records)} entries ({partial} partial) to {args.out}")
    return EXIT_PARTIAL if partial else EXIT_OK


def _stats_payload(records, assume_2016: bool) -> dict:
    if assume_2016:
        records = pipeline.apply_assume_2016(records)
    payload = {}
    for measure in ("lexical", "grammar"):
        payload[measure] = [
            {"speaker": s.group_key, "mean": s.mean, "sd": s.sd, "n": s.n}
            for s in pipeline.aggregate(records, measure)
        ]
    return payload


def cmd_analyze(args) -> int:
    records = pipeline.load_scores(args.scores)
    payload = _stats_payload(records, args.assume_2016)
    if args.json:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        lines = ["speaker,measure,mean,sd,n"]
        for measure in ("lexical", "grammar"):
            for row in payload[measure]:
                sd = "" if row["sd"] is None else "%.4f" % row["sd"]
                lines.append(f"{row['speaker']},{measure},{row['mean']:.4f},{sd},{row['n']}")
        text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_report(args) -> int:
    from . import report  # defers the matplotlib import to the one command that needs it

    records = pipeline.load_scores(args.scores)
    written = report.generate_report(records, args.out, assume_2016=args.assume_2016)
    print(f"wrote {len(written)} files to {args.out}")
    return EXIT_OK


def cmd_formulas(args) -> int:
    doc = tokenize(read_text_file(args.text), _load_abbrevs(args.abbrev))
    if doc.token_count == 0:
        raise EmptyDocumentError(f"{args.text}: no tokens after tokenization")
    words, sentences, syllables = document_counts(doc)
    easy = _load_easy(args.easy_words)
    difficult = formulas.count_difficult(doc, easy)
    fk = formulas.flesch_kincaid(words, sentences, syllables)
    dc = formulas.dale_chall(words, sentences, difficult)
    if args.json:
        payload = {
            "words": words,
            "sentences": sentences,
            "syllables": syllables,
            "difficult_words": difficult,
            "pct_difficult": dc.inputs.pct_difficult,
            "flesch_kincaid": fk.value,
            "dale_chall": dc.value,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"words: {words}")
        print(f"sentences: {sentences}")
        print(f"syllables: {syllables}")
        print(f"difficult words: {difficult} ({dc.inputs.pct_difficult:.1f}%)")
        print(f"flesch_kincaid: {fk.value:.4f}")
        print(f"dale_chall: {dc.value:.4f}")
    return EXIT_OK


_COMMANDS = {
    "train-lexical": cmd_train_lexical,
    "train-grammar": cmd_train_grammar,
    "score": cmd_score,
    "analyze": cmd_analyze,
    "report": cmd_report,
    "formulas": cmd_formulas,
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ReadlevelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
