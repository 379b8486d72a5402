import subprocess
import sys

import pytest

from morfo.cli import main

from .conftest import CORPUS_PATH, LEXICON_PATH
from .golden import WORKED_SENTENCE, WORKED_SENTENCE_SEPARATED


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_separate_worked_example(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text(WORKED_SENTENCE + "\n", encoding="utf-8")
    code, out, err = run(
        ["separate", str(src), "--lexicon", str(LEXICON_PATH), "--paper-exact"], capsys
    )
    assert code == 0
    assert out == WORKED_SENTENCE_SEPARATED + "\n"
    assert err == ""


def test_separate_combine_round_trip(tmp_path, capsys):
    src = tmp_path / "in.txt"
    sep = tmp_path / "sep.txt"
    src.write_text("Dimakan pokoknya?\nBerjalan-jalan.\n", encoding="utf-8")
    code, _, _ = run(
        ["separate", str(src), "--lexicon", str(LEXICON_PATH), "-o", str(sep)], capsys
    )
    assert code == 0
    code, out, _ = run(["combine", str(sep)], capsys)
    assert code == 0
    assert out == "dimakan pokoknya ?\nberjalan-jalan .\n"


def test_separate_is_idempotent(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("\n".join(CORPUS_PATH.read_text().splitlines()[:50]) + "\n")
    once = tmp_path / "once.txt"
    twice = tmp_path / "twice.txt"
    run(["separate", str(src), "--lexicon", str(LEXICON_PATH), "-o", str(once)], capsys)
    run(["separate", str(once), "--lexicon", str(LEXICON_PATH), "-o", str(twice)], capsys)
    assert once.read_bytes() == twice.read_bytes()


def test_separate_jobs_preserves_order(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("\n".join(CORPUS_PATH.read_text().splitlines()[:200]) + "\n")
    serial = tmp_path / "serial.txt"
    parallel = tmp_path / "parallel.txt"
    run(["separate", str(src), "--lexicon", str(LEXICON_PATH), "-o", str(serial)], capsys)
    run(
        ["separate", str(src), "--lexicon", str(LEXICON_PATH), "-o", str(parallel), "--jobs", "2"],
        capsys,
    )
    assert serial.read_bytes() == parallel.read_bytes()


def test_separate_without_lexicon_exits_2(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("MORFO_LEXICON", raising=False)
    src = tmp_path / "in.txt"
    src.write_text("makan\n")
    code, _, err = run(["separate", str(src), "--lexicon", ""], capsys)
    assert code == 2
    assert "lexicon" in err


def test_lexicon_env_var(tmp_path, monkeypatch):
    src = tmp_path / "in.txt"
    src.write_text("dimakan\n")
    env_run = subprocess.run(
        [sys.executable, "-m", "morfo.cli", "separate", str(src)],
        capture_output=True,
        text=True,
        env={"MORFO_LEXICON": str(LEXICON_PATH), "PATH": "/usr/bin:/bin"},
    )
    assert env_run.returncode == 0
    assert env_run.stdout == "di~ makan\n"


def test_missing_input_file_exits_1(capsys):
    code, _, err = run(["separate", "/nonexistent", "--lexicon", str(LEXICON_PATH)], capsys)
    assert code == 1
    assert "morfo:" in err


def test_combine_reports_dangling_affix_with_line_number(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("ter~ jamin\n~kan saja\n", encoding="utf-8")
    code, out, err = run(["combine", str(src)], capsys)
    assert code == 1
    assert "combine: line 2:" in err
    # good line combined, bad line passed through unchanged
    assert out == "terjamin\n~kan saja\n"


def test_stats_output(tmp_path, capsys):
    before = tmp_path / "before.txt"
    after = tmp_path / "after.txt"
    before.write_text("dimakan pokoknya\ndimakan\n")
    after.write_text("di~ makan pokok ~nya\ndi~ makan\n")
    code, out, _ = run(["stats", "--before", str(before), "--after", str(after)], capsys)
    assert code == 0
    assert "tokens_before\t2" in out
    assert "tokens_after\t4" in out
    assert "mark_vocab\t2" in out


def test_bleu_output(tmp_path, capsys):
    hyp = tmp_path / "hyp.txt"
    ref = tmp_path / "ref.txt"
    hyp.write_text("benar kah semua korban\n")
    ref.write_text("benar kah semua korban\n")
    code, out, _ = run(["bleu", "--hyp", str(hyp), "--ref", str(ref)], capsys)
    assert code == 0
    assert "bleu\t100.00" in out
    assert "p1\t1.0000" in out
    assert "brevity_penalty\t1.0000" in out


def test_bleu_sentence_mode(tmp_path, capsys):
    hyp = tmp_path / "hyp.txt"
    ref = tmp_path / "ref.txt"
    hyp.write_text("a b c d\nw x y z\n")
    ref.write_text("a b c d\na b c d\n")
    code, out, _ = run(["bleu", "--hyp", str(hyp), "--ref", str(ref), "--sentence"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1\t100.00"
    assert lines[1].startswith("2\t")


def test_bleu_length_mismatch_exits_1(tmp_path, capsys):
    hyp = tmp_path / "hyp.txt"
    ref = tmp_path / "ref.txt"
    hyp.write_text("a\n")
    ref.write_text("a\nb\n")
    code, _, err = run(["bleu", "--hyp", str(hyp), "--ref", str(ref)], capsys)
    assert code == 1
    assert err


def test_rules_dump(capsys):
    code, out, _ = run(["rules", "dump"], capsys)
    assert code == 0
    assert "me.1" in out
    assert "disallowed" in out


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_console_script_installed():
    proc = subprocess.run(["morfo", "rules", "dump"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "me.1" in proc.stdout
