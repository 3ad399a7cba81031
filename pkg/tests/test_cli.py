import json

import pytest

from xyreg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_text(capsys):
    code, out, _ = run(capsys, "gen", "--n", "2")
    assert code == 0
    assert "f11" in out and "f21" in out and "×" in out
    assert "f[1,2] = x[1,1]*y[1,2] + x[1,2]*y[2,2]" in out
    assert out.endswith("\n")


def test_gen_json(capsys):
    code, out, _ = run(capsys, "gen", "--n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["selected"]) == 8
    assert payload["column_limits"] == [4, 3, 1, 1]
    assert [s["label"] for s in payload["selected"]][:4] == \
        ["f[1,1]", "f[2,1]", "f[3,1]", "f[4,1]"]


def test_gen_usage_errors(capsys):
    assert run(capsys, "gen", "--n", "1")[0] == 2
    assert run(capsys, "gen")[0] == 2
    assert run(capsys, "gen", "--n", "3", "--prime", "10")[0] == 2
    assert run(capsys, "gen", "--n", "3", "--prime", "3")[0] == 2  # prime must exceed n
    assert run(capsys, "bogus-command")[0] == 2


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "--n", "5")
    assert code == 0
    assert "verdict: certified" in out


def test_certify_json_step_count(capsys):
    code, out, _ = run(capsys, "certify", "--n", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "certified"
    assert len(payload["steps"]) == 4
    assert payload["steps"][2]["kind"] == "COPRIME_EXTEND"


def test_oracle_default_sequence(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "2", "--method", "hilbert")
    assert code == 0
    assert "verdict: regular" in out


FULL_SET = """\
# all four entries of the 2x2 product
x[1,1]*y[1,1] + x[1,2]*y[2,1]
x[1,1]*y[1,2] + x[1,2]*y[2,2]
x[2,1]*y[1,1] + x[2,2]*y[2,1]
x[2,1]*y[1,2] + x[2,2]*y[2,2]
"""


def test_oracle_input_file_negative(capsys, tmp_path):
    path = tmp_path / "full_set.txt"
    path.write_text(FULL_SET)
    code, out, _ = run(capsys, "oracle", "--n", "2", "--input", str(path),
                       "--method", "colon")
    assert code == 1
    assert "first failure at index 4" in out
    code, out, _ = run(capsys, "oracle", "--n", "2", "--input", str(path),
                       "--method", "colon", "--format", "json")
    assert code == 1
    payload = json.loads(out)
    assert payload["verdict"] == "not-regular" and payload["first_failure"] == 4


def test_oracle_budget_inconclusive(capsys):
    code, _, err = run(capsys, "oracle", "--n", "2", "--budget-pairs", "1")
    assert code == 3
    assert "inconclusive" in err


def test_oracle_bad_input_line(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("x[9,9]\n")
    code, _, err = run(capsys, "oracle", "--n", "2", "--input", str(path))
    assert code == 2
    assert "bad.txt:1" in err


def test_counterexample(capsys):
    code, out, _ = run(capsys, "counterexample")
    assert code == 0
    assert "all checks passed" in out
    code, out, _ = run(capsys, "counterexample", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["residue"] == "0"
    # the identity is integral, so it holds over any prime field too
    code, _, _ = run(capsys, "counterexample", "--field", "gfp", "--prime", "2")
    assert code == 0


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--n", "2")
    assert code == 0
    assert "final length: 3" in out
    assert "rejected f[2,2]: not-regular" in out
    code, out, _ = run(capsys, "search", "--n", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["final_length"] == 3
    assert payload["rejected"] == [{"entry": "f[2,2]", "reason": "not-regular"}]


def test_gb_lex_example(capsys, tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("x[1,1] - y[1,1]\ny[1,1]^2\n")
    code, out, _ = run(capsys, "gb", "--n", "2", "--input", str(path),
                       "--order", "lex")
    assert code == 0
    assert out.splitlines() == ["x[1,1] + 32002*y[1,1]", "y[1,1]^2"]


def test_gb_column_one_echo(capsys, tmp_path):
    path = tmp_path / "col1.txt"
    path.write_text("7*x[1,1]*y[1,1] + 7*x[1,2]*y[2,1]\n"
                    "x[2,1]*y[1,1] + x[2,2]*y[2,1]\n")
    code, out, _ = run(capsys, "gb", "--n", "2", "--input", str(path),
                       "--order", "paper")
    assert code == 0
    assert out.splitlines() == ["x[1,1]*y[1,1] + x[1,2]*y[2,1]",
                                "x[2,2]*y[2,1] + x[2,1]*y[1,1]"]


def test_gb_usage_errors(capsys, tmp_path):
    assert run(capsys, "gb", "--n", "2")[0] == 2
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n0\n")
    assert run(capsys, "gb", "--n", "2", "--input", str(empty))[0] == 2
    missing = tmp_path / "missing.txt"
    assert run(capsys, "gb", "--n", "2", "--input", str(missing))[0] == 2


def test_out_file(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "certify", "--n", "2", "--format", "json",
                       "--out", str(out_path))
    assert code == 0 and out == ""
    payload = json.loads(out_path.read_text())
    assert payload["verdict"] == "certified"
    assert out_path.read_text().endswith("\n")


def test_text_and_json_verdicts_agree(capsys, tmp_path):
    path = tmp_path / "full_set.txt"
    path.write_text(FULL_SET)
    for fmt in ("text", "json"):
        code, _, _ = run(capsys, "oracle", "--n", "2", "--input", str(path),
                         "--method", "hilbert", "--format", fmt)
        assert code == 1
