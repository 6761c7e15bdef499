import json
import subprocess
import sys

import pytest

from sqfchar.atlas import bundled_witness_path
from sqfchar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_failing_group_exits_3(capsys):
    code, out, _ = run(capsys, "check", "Alt(8)")
    assert code == 3
    assert "degree 20" in out and "codegree 1008" in out and "gcd 4" in out


def test_check_structured(capsys):
    code, out, _ = run(capsys, "check", "Alt(8)", "--format", "structured")
    doc = json.loads(out)
    assert code == 3
    assert doc["satisfies"] is False
    assert doc["witness"] == {"degree": 20, "codegree": 1008, "prime": 2}


def test_check_satisfying_group_exits_0(capsys):
    code, out, _ = run(capsys, "check", "named:M10")
    assert code == 0 and "satisfies" in out


def test_table_and_classes(capsys):
    code, out, _ = run(capsys, "table", "Sym(3)")
    assert code == 0 and "X.3" in out
    code, out, _ = run(capsys, "table", "Alt(5)", "--format", "structured")
    assert json.loads(out)["order"] == 60
    code, out, _ = run(capsys, "classes", "Alt(4)", "--format", "structured")
    doc = json.loads(out)
    assert [c["size"] for c in doc["classes"]] == [1, 3, 4, 4]


def test_codegrees(capsys):
    code, out, _ = run(capsys, "codegrees", "Alt(8)", "--format", "structured")
    rows = json.loads(out)["rows"]
    assert {"degree": 20, "codegree": 1008, "gcd": 4}.items() <= next(r for r in rows if r["degree"] == 20).items()


def test_psl2_scan(capsys):
    code, out, _ = run(capsys, "psl2-scan", "--q", "9", "--format", "structured")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 5
    assert [r["verdict"] for r in rows] == ["satisfies"] * 4 + ["fails"]
    assert [r["exceptional"] for r in rows] == [False, True, True, False, False]
    code, out, _ = run(capsys, "psl2-scan", "--q-range", "4:16", "--delta-only", "--format", "structured")
    rows = json.loads(out)["rows"]
    assert rows and all(r["delta"] and r["q"] % 2 for r in rows)
    assert {r["q"] for r in rows} == {5, 7, 9, 11, 13}


@pytest.mark.parametrize("argv", [
    ["psl2-scan"],
    ["psl2-scan", "--q", "6"],
    ["psl2-scan", "--q", "5", "--q-range", "4:8"],
    ["psl2-scan", "--q-range", "9:4"],
    ["an-witness", "--n", "7"],
    ["check", "Foo(3)"],
    ["check", "Sym(9)", "--bound", "1000"],
    ["verify-paper", "--only", "no-such-check"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("sqfchar: ")


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["table"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["check", "Alt(5)", "--format", "xml"])
    assert info.value.code == 2


def test_an_witness(capsys):
    code, out, _ = run(capsys, "an-witness", "--n", "8:10", "--format", "structured")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 9
    assert rows[2] == {"n": 8, "partition": [6, 2], "degree": 20, "closedForm": 20, "codegree": 1008, "codegreeClosedForm": None}


def test_verify_data_reports_discrepancies(capsys):
    code, out, err = run(capsys, "verify-data", "--format", "structured")
    rows = json.loads(out)["rows"]
    assert code == 1  # the bundled Lie tables contain rows that fail arithmetic
    assert sum(r["status"] == "confirmed" for r in rows) > 100
    assert "discrepancy" in err


def test_verify_data_at_fixed_q(capsys):
    code, out, _ = run(capsys, "verify-data", "--q", "5", "--format", "structured")
    rows = json.loads(out)["rows"]
    family = [r for r in rows if r["q"] == 5]
    assert family and all(r["q"] == 5 for r in family)


def test_verify_data_malformed_file_names_the_line(capsys, tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("# witness-format: 1\nM11\tsporadic\t7920\t-\t44\n")
    code, _, err = run(capsys, "verify-data", "--data", str(path))
    assert code == 1
    assert "bad.tsv:2:" in err


def test_verify_paper_subset(capsys):
    code, out, err = run(capsys, "verify-paper", "--only", "an-witness,psl2-gcd")
    assert code == 0
    assert "PASS  an-witness" in out and "PASS  psl2-gcd" in out
    assert "2/2 checks passed" in out
    assert "running an-witness" in err and "running" not in out


def test_verify_paper_with_corrupted_witness_file(capsys, tmp_path):
    text = bundled_witness_path().read_text()
    corrupted = text.replace("M11\tsporadic\t2^4*3^2*5*11\t-\t2^2*11\t4", "M11\tsporadic\t2^4*3^2*5*11\t-\t2*11\t4")
    assert corrupted != text
    path = tmp_path / "corrupt.tsv"
    path.write_text(corrupted)
    code, out, _ = run(capsys, "verify-paper", "--only", "sporadic", "--data", str(path), "--format", "structured")
    doc = json.loads(out)
    assert code == 1 and doc["passed"] is False
    assert any("M11" in line and line.startswith("[FAIL]") for line in doc["checks"][0]["details"])


def test_verify_paper_with_unreadable_file(capsys, tmp_path):
    path = tmp_path / "broken.tsv"
    path.write_text("no header\n")
    code, out, _ = run(capsys, "verify-paper", "--only", "sporadic", "--data", str(path))
    assert code == 1
    assert "broken.tsv:1:" in out


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sqfchar.cli", "check", "Alt(5)"], capture_output=True, text=True)
    assert proc.returncode == 0 and "satisfies" in proc.stdout
