import json
import os
import subprocess
import sys

from chowmod.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_witt_star(capsys):
    code, out = run(capsys, "witt", "star", "--field", "F3", "--m", "6", "--x", "1,0,2", "--y", "2,1,0")
    assert code == 0 and out.strip() == "[1, 1, 2, 1, 0, 1]"


def test_witt_selftest_report(capsys):
    code, out = run(capsys, "witt", "selftest", "--field", "F2", "--m", "8")
    report = json.loads(out)
    assert code == 0
    assert all({"name", "status"} <= set(c) for c in report["checks"])


def test_witt_order_and_ghost(capsys):
    assert run(capsys, "witt", "order", "--field", "F2", "--m", "2", "--x", "1") == (0, "4\n")
    code, out = run(capsys, "witt", "ghost", "--field", "Q", "--m", "3", "--x", "-1")
    assert out.strip() == "[1, 1, 1]"


def test_divisor_conv(capsys):
    code, out = run(capsys, "divisor", "conv", "--field", "F2", "--a", "[u^2+u+1]", "--b", "[u^2+u+1]")
    assert code == 0 and out.strip() == "2*[u + 1] + 1*[u^2 + u + 1]"


def test_divisor_bad_input(capsys):
    code, _ = run(capsys, "divisor", "conv", "--field", "F2", "--a", "[u^2+1]", "--b", "[u+1]")
    assert code == 2


def test_cubical_homology(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"degrees": [{"q": 0, "rank": 1}, {"q": 1, "rank": 1, "boundary": [[2]]}]}))
    code, out = run(capsys, "cubical", "homology", "--in", str(path), "--q", "0")
    assert code == 0 and out.strip() == "H_0 = Z/2"


def test_cycles_check(capsys):
    code, out = run(capsys, "cycles", "check", "--in", os.path.join(DATA, "diagonal_corpus.json"))
    verdicts = [c["verdict"] for c in json.loads(out)["certificates"]]
    assert verdicts == ["PASS", "PASS", "FAIL"] and code == 1


def test_chow_exit_codes(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, _ = run(capsys, "chow", "compute", "--field", "F2", "--m", "1", "--deg-bound", "2", "--height", "2",
                  "--out", str(out))
    assert code == 0 and out.exists()
    code, _ = run(capsys, "chow", "compute", "--field", "F2", "--m", "1", "--deg-bound", "2", "--height", "3",
                  "--cap", "2")
    assert code == 2


def test_suite_scope(capsys):
    code, out = run(capsys, "suite", "--scope", "divisors")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert {c["scope"] for c in report["checks"]} == {"divisors"}
    assert all(c["identity"] for c in report["checks"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chowmod", "witt", "add", "--field", "F2", "--m", "2",
                           "--x", "1", "--y", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "[0, 1]"
