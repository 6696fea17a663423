import json

import pytest

from helpers import FIXTURE_PATH
from readlevel import cli

FK_ORACLE_SENTENCE = "many people will win because we believe in better days"


def write_toy_lexical_corpus(path):
    lines = [
        json.dumps({"grade": 1, "text": "the cat sat. the dog ran."}),
        json.dumps({"grade": 2, "text": "the feline reclined gracefully."}),
    ]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_toy_grammar_corpus(root):
    (root / "grade-01").mkdir(parents=True)
    (root / "grade-02").mkdir()
    (root / "grade-01" / "a.trees").write_text("(A (B b) (C c))\n", encoding="utf-8")
    (root / "grade-02" / "b.trees").write_text("(X (Y y) (Z z))\n", encoding="utf-8")


def test_train_lexical_deterministic(tmp_path, capsys):
    corpus = tmp_path / "corpus.jsonl"
    write_toy_lexical_corpus(corpus)
    model1 = tmp_path / "m1.json"
    model2 = tmp_path / "m2.json"
    assert cli.main(["train-lexical", str(corpus), "--out", str(model1)]) == 0
    out = capsys.readouterr().out
    assert "grades [1, 2]" in out
    assert cli.main(["train-lexical", str(corpus), "--out", str(model2)]) == 0
    assert model1.read_bytes() == model2.read_bytes()


def test_train_lexical_degenerate_corpus(tmp_path, capsys):
    corpus = tmp_path / "corpus.jsonl"
    corpus.write_text(json.dumps({"grade": 1, "text": "only one grade."}) + "\n", encoding="utf-8")
    assert cli.main(["train-lexical", str(corpus), "--out", str(tmp_path / "m.json")]) == 2
    assert "degenerate" in capsys.readouterr().err


def test_train_grammar_directory(tmp_path, capsys):
    write_toy_grammar_corpus(tmp_path / "trees")
    model = tmp_path / "grammar.json"
    assert cli.main(["train-grammar", str(tmp_path / "trees"), "--out", str(model)]) == 0
    assert "patterns" in capsys.readouterr().out
    assert model.exists()


def test_unknown_flag_rejected(tmp_path):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["train-lexical", "x.jsonl", "--out", "m.json", "--bogus"])
    assert excinfo.value.code == 2


def test_score_with_models(tmp_path):
    corpus = tmp_path / "corpus.jsonl"
    write_toy_lexical_corpus(corpus)
    write_toy_grammar_corpus(tmp_path / "trees")
    lex_model = tmp_path / "lex.json"
    gram_model = tmp_path / "gram.json"
    assert cli.main(["train-lexical", str(corpus), "--out", str(lex_model)]) == 0
    assert cli.main(["train-grammar", str(tmp_path / "trees"), "--out", str(gram_model)]) == 0

    (tmp_path / "s1.txt").write_text("The cat sat on the mat today.", encoding="utf-8")
    (tmp_path / "s1.trees").write_text("(A (B b) (C c))\n", encoding="utf-8")
    manifest = tmp_path / "manifest.csv"
    manifest.write_text(
        "speaker,date,occasion,text_path,trees_path\n"
        "Smith,2/1/2016,Rally,s1.txt,s1.trees\n",
        encoding="utf-8",
    )
    out_csv = tmp_path / "scores.csv"
    code = cli.main([
        "score", str(manifest), "--out", str(out_csv),
        "--lexical-model", str(lex_model), "--grammar-model", str(gram_model),
    ])
    assert code == 0
    lines = out_csv.read_text().splitlines()
    assert lines[0] == "speaker,date,occasion,lexical,grammar,fk,dale_chall"
    row = lines[1].split(",")
    assert row[0] == "Smith" and row[1] == "2016-02-01"
    assert all(row[i] for i in (3, 4, 5, 6))


def test_score_partial_exit_code(tmp_path, capsys):
    (tmp_path / "good.txt").write_text("We will win today.", encoding="utf-8")
    manifest = tmp_path / "manifest.csv"
    manifest.write_text(
        "speaker,date,occasion,text_path,trees_path\n"
        "Smith,2/1/2016,Rally,good.txt,\n"
        "Jones,2/2/2016,Rally,missing.txt,\n",
        encoding="utf-8",
    )
    out_csv = tmp_path / "scores.csv"
    assert cli.main(["score", str(manifest), "--out", str(out_csv)]) == 1
    lines = out_csv.read_text().splitlines()
    assert len(lines) == 3
    assert lines[2].split(",")[3:] == ["", "", "", ""]


def test_score_empty_manifest(tmp_path):
    manifest = tmp_path / "manifest.csv"
    manifest.write_text("speaker,date,occasion,text_path,trees_path\n", encoding="utf-8")
    out_csv = tmp_path / "scores.csv"
    assert cli.main(["score", str(manifest), "--out", str(out_csv)]) == 0
    assert out_csv.read_text() == "speaker,date,occasion,lexical,grammar,fk,dale_chall\n"


def test_score_passthrough_normalization(tmp_path):
    out1 = tmp_path / "norm1.csv"
    out2 = tmp_path / "norm2.csv"
    assert cli.main(["score", str(FIXTURE_PATH), "--out", str(out1)]) == 0
    # normalizing the normalized output reproduces it byte for byte
    assert cli.main(["score", str(out1), "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert len(out1.read_text().splitlines()) == 33


def test_score_model_kind_mismatch(tmp_path, capsys):
    write_toy_grammar_corpus(tmp_path / "trees")
    gram_model = tmp_path / "gram.json"
    assert cli.main(["train-grammar", str(tmp_path / "trees"), "--out", str(gram_model)]) == 0
    manifest = tmp_path / "manifest.csv"
    manifest.write_text("speaker,date,occasion,text_path,trees_path\n", encoding="utf-8")
    code = cli.main([
        "score", str(manifest), "--out", str(tmp_path / "s.csv"), "--lexical-model", str(gram_model),
    ])
    assert code == 2
    assert "feature kind" in capsys.readouterr().err


def test_analyze_table(capsys):
    assert cli.main(["analyze", str(FIXTURE_PATH)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "speaker,measure,mean,sd,n"
    assert "Trump,grammar,5.7483,1.3994,8" in out
    assert "Cruz,lexical,8.4000,0.5477,5" in out


def test_analyze_json(capsys):
    assert cli.main(["analyze", str(FIXTURE_PATH), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    trump = next(row for row in payload["grammar"] if row["speaker"] == "Trump")
    assert trump["n"] == 8
    assert abs(trump["mean"] - 5.7483) < 1e-4


def test_analyze_to_file(tmp_path, capsys):
    out = tmp_path / "stats.csv"
    assert cli.main(["analyze", str(FIXTURE_PATH), "--out", str(out)]) == 0
    assert "Trump" in out.read_text()


def test_report_command(tmp_path, capsys):
    out_dir = tmp_path / "report"
    assert cli.main(["report", str(FIXTURE_PATH), "--out", str(out_dir)]) == 0
    assert "32 files" in capsys.readouterr().out
    assert len(list(out_dir.glob("*.svg"))) == 16


def test_report_empty_scores(tmp_path, capsys):
    empty = tmp_path / "empty.csv"
    empty.write_text("speaker,date,occasion,lexical,grammar,fk,dale_chall\n", encoding="utf-8")
    assert cli.main(["report", str(empty), "--out", str(tmp_path / "out")]) == 2


def test_formulas_human(tmp_path, capsys):
    text = tmp_path / "speech.txt"
    text.write_text(FK_ORACLE_SENTENCE, encoding="utf-8")
    assert cli.main(["formulas", str(text)]) == 0
    out = capsys.readouterr().out
    assert "words: 10" in out
    assert "syllables: 15" in out
    assert "flesch_kincaid: 6.0100" in out
    assert "dale_chall: 0.4960" in out


def test_formulas_json(tmp_path, capsys):
    text = tmp_path / "speech.txt"
    text.write_text(FK_ORACLE_SENTENCE, encoding="utf-8")
    assert cli.main(["formulas", str(text), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["words"] == 10 and payload["sentences"] == 1
    assert abs(payload["flesch_kincaid"] - 6.01) <= 1e-9
    assert abs(payload["dale_chall"] - 0.496) <= 1e-9


def test_formulas_empty_file(tmp_path, capsys):
    text = tmp_path / "empty.txt"
    text.write_text("...", encoding="utf-8")
    assert cli.main(["formulas", str(text)]) == 2
    assert "no tokens" in capsys.readouterr().err


def test_formulas_custom_easy_words(tmp_path, capsys):
    text = tmp_path / "speech.txt"
    text.write_text("we will win", encoding="utf-8")
    easy = tmp_path / "easy.txt"
    easy.write_text("we\nwill\n", encoding="utf-8")
    assert cli.main(["formulas", str(text), "--easy-words", str(easy), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["difficult_words"] == 1


def test_missing_input_file_is_error(tmp_path, capsys):
    assert cli.main(["formulas", str(tmp_path / "nope.txt")]) == 2
    assert "error" in capsys.readouterr().err
