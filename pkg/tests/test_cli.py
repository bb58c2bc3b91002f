import json
import subprocess
import sys

import pytest

from markov_dyck import golden
from markov_dyck.cli import CliConfig, UsageError, main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_check_word_examples(capsys):
    assert run(capsys, "check-word", "a1 b2")[:2] == (0, "forbidden: 0\n")
    assert run(capsys, "check-word", "b2 b2")[1] == "forbidden: 0\n"
    assert run(capsys, "check-word", "")[1] == "admissible: 1\n"
    status, out, _ = run(capsys, "check-word", "b1 a1", "--oracle")
    assert status == 0
    assert out.splitlines() == ["admissible: b1 P{1,2} a1", "oracle: admissible"]


def test_check_word_json(capsys):
    status, out, _ = run(capsys, "check-word", "a1 b1", "--format", "json", "--matrix", "full:2")
    doc = json.loads(out)
    assert status == 0 and doc["admissible"] and doc["reduced"] == "P{1,2}"


def test_check_word_bad_symbol(capsys):
    status, _, err = run(capsys, "check-word", "x1")
    assert status == 2 and "error" in err


def test_matrices_json(capsys):
    status, out, _ = run(capsys, "matrices", "--matrix", "full:2", "--max-level", "1", "--format", "json")
    doc = json.loads(out)
    assert status == 0
    assert [lv["l"] for lv in doc["levels"]] == [0, 1]
    assert doc["levels"][0]["M"] == [[["a1", "b1", "b2"], ["a2", "b1", "b2"]]]


def test_matrices_fibonacci_golden(capsys):
    status, out, _ = run(capsys, "matrices", "--max-level", "4", "--format", "json")
    doc = json.loads(out)
    for lv in doc["levels"]:
        l = lv["l"]
        assert lv["I"] == golden.I_MATRICES[l].tolist()
        assert lv["M"] == golden.SYMBOLIC_MATRICES[l].to_lists()
        if l >= 1:
            assert lv["A"] == golden.A_MATRICES[l].tolist()


def test_matrices_pretty_and_latex(capsys):
    _, out, _ = run(capsys, "matrices", "--max-level", "1", "--min-level", "1")
    assert "M_1,2" in out and "a1+b1" in out
    _, out, _ = run(capsys, "matrices", "--max-level", "1", "--min-level", "1", "--format", "latex")
    assert "\\begin{smallmatrix}" in out and "\\alpha_1 + \\beta_1" in out


def test_ktheory_json(capsys):
    status, out, _ = run(capsys, "ktheory", "--max-level", "8", "--format", "json")
    doc = json.loads(out)
    assert status == 0
    assert [lv["k0"]["free_rank"] for lv in doc["levels"]][1:] == [2, 3, 5, 8, 13, 21, 34]
    assert all(lv["k1_rank"] == 0 for lv in doc["levels"])


def test_ktheory_full2(capsys):
    status, out, _ = run(capsys, "ktheory", "--matrix", "full:2", "--max-level", "6", "--format", "json")
    doc = json.loads(out)
    assert status == 0
    assert all(lv["k1_rank"] == 0 for lv in doc["levels"])
    assert all(lv["k0"]["invariant_factors"] == [2] for lv in doc["levels"])


def test_ktheory_table(capsys):
    status, out, _ = run(capsys, "ktheory", "--max-level", "3", "-v")
    assert status == 0 and "Z^2" in out and "v = " in out


def test_json_output_is_byte_identical(tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.json"
        assert main(["ktheory", "--max-level", "5", "--format", "json", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_usage_errors(capsys):
    assert run(capsys, "ktheory", "--max-level", "0")[0] == 2
    assert run(capsys, "verify-paper", "--suite", "nope")[0] == 2
    assert run(capsys, "matrices", "--min-level", "5", "--max-level", "2")[0] == 2
    assert run(capsys, "ktheory", "--matrix", "full:zz")[0] == 2
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_matrix_file_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n1 1\n1 7\n")
    status, _, err = run(capsys, "ktheory", "--matrix", str(bad))
    assert status == 2 and "line 3" in err
    status, _, err = run(capsys, "ktheory", "--matrix", str(tmp_path / "missing.txt"))
    assert status == 2


def test_memory_guard_exit(capsys):
    status, _, err = run(capsys, "ktheory", "--matrix", "full:2", "--max-level", "40")
    assert status == 2 and "smaller --max-level" in err


def test_cli_config_validation():
    with pytest.raises(UsageError):
        CliConfig(format="yaml")
    assert CliConfig().max_level == 8


def test_verify_suite_dyck2(capsys):
    status, out, _ = run(capsys, "verify-paper", "--suite", "dyck2", "--format", "json")
    doc = json.loads(out)
    assert status == 0 and doc["passed"]
    names = " ".join(c["name"] for c in doc["checks"])
    assert "intertwining" in names and "torsion" in names


def test_verify_suite_fibonacci_reports_the_odd_level_failure(capsys):
    status, out, _ = run(capsys, "verify-paper", "--suite", "fibonacci", "--format", "json")
    doc = json.loads(out)
    failed = [c["name"] for c in doc["checks"] if not c["passed"]]
    assert status == 1
    assert len(failed) == 1 and "exact" in failed[0]


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "markov_dyck.cli", "check-word", "a2 b2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "admissible: P{1}\n"


def test_run_suite_turns_crashes_into_failures(monkeypatch):
    from markov_dyck import verify

    def boom():
        raise ArithmeticError("bad pivot")

    monkeypatch.setattr(verify, "suite_checks", lambda s: [("ok", lambda: (True, "")), ("boom", boom)])
    res = verify.run_suite("fibonacci")
    assert [r.passed for r in res.results] == [True, False]
    assert "bad pivot" in res.results[1].detail and res.exit_status == 1
