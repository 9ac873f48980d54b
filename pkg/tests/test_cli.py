import io
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import pytest

from leafkit.cli import main, parse
from leafkit.errors import PolySyntaxError

DOCS = Path(__file__).resolve().parent.parent / "docs"
EXAMPLES = DOCS / "examples.txt"

HEADER = """ring R = QQ[x,y]
der d on R : x -> -2*y, y -> 3*x^2
"""


def run_text(text, *args):
    out = io.StringIO()
    with tempfile.TemporaryDirectory() as tmp:
        src = Path(tmp) / "script.txt"
        src.write_text(text)
        code = main([str(src), *args], stdout=out)
    return code, out.getvalue()


def test_examples_match_golden_output():
    code, out = run_text(EXAMPLES.read_text())
    assert code == 0
    assert out == (DOCS / "examples.out").read_text()


def test_examples_round_trip_through_source():
    script = parse(EXAMPLES.read_text())
    again = parse(script.to_source())
    assert again == script


def test_deterministic():
    a = run_text(EXAMPLES.read_text(), "--json")
    b = run_text(EXAMPLES.read_text(), "--json")
    assert a == b


def test_verdicts():
    code, out = run_text(HEADER + "ideal P = <x-1, y>\nis_differential P d\ntrajectory P d\n")
    assert code == 0
    lines = out.splitlines()
    assert lines[-2] == "is_differential(P,d): false [d(y) = 3*x^2 not in P]"
    assert lines[-1] == "trajectory(P,d): <x^3+y^2-1> [Exact, deg<=3, rounds=8]"


def test_failed_assert_exits_1():
    code, out = run_text(HEADER + "ideal P = <x-1, y>\nassert is_differential P d\n")
    assert code == 1
    assert "FAILED [command 4, line 4]" in out


def test_runtime_error_exits_1():
    text = HEADER + "ideal I = <x>\nscheme X = (R, I, d)\nis_leaf X I\n"
    code, out = run_text(text)
    assert code == 1
    assert "error: derivation does not descend" in out


@pytest.mark.parametrize(
    "text, column",
    [
        ("ring R = QQ[x]\nideal P = x -\n", None),
        ("ring R = QQ[x]\nideal P = <x - >\n", 14),
        ("ring R = QQ[x]\nfrobnicate P\n", 1),
        ("ring R = QQ[x]\nideal P = <y>\n", 12),
    ],
)
def test_syntax_errors_exit_2(text, column, capsys):
    code, out = run_text(text)
    assert code == 2 and out == ""
    err = capsys.readouterr().err
    assert err.startswith("syntax error: line 2")
    if column is not None:
        assert f"column {column}" in err


def test_dangling_operator_is_named():
    with pytest.raises(PolySyntaxError, match="dangling '-'"):
        parse("ring R = QQ[x]\nideal P = <x - >\n")


def test_duplicate_name_is_rejected():
    with pytest.raises(PolySyntaxError):
        parse("ring R = QQ[x]\nring R = QQ[y]\n")


def test_json_report():
    code, out = run_text(HEADER + "ideal P = <x-1, y>\nassert trajectory P d\n", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["exit_code"] == 0
    res = doc["results"][-1]
    assert res["name"] == "trajectory(P,d)" and res["status"] == "ok"
    assert res["certificate"] == "Exact, deg<=3, rounds=8"


def test_json_syntax_error():
    code, out = run_text("ring R = QQ[x]\nideal P = <x +>\n", "--json")
    doc = json.loads(out)
    assert code == 2 and doc["syntax_error"]["line"] == 2


def test_options_reach_the_engine():
    text = "ring R = QQ[x,y]\nder e on R : x -> 1, y -> x^3\nideal P = <x, y>\ntrajectory P e\n"
    _, low = run_text(text, "--deg", "2")
    _, high = run_text(text, "--deg", "4")
    assert low.splitlines()[-1].startswith("trajectory(P,e): <0>")
    assert high.splitlines()[-1].startswith("trajectory(P,e): <x^4-4*y>")
    _, bounded = run_text(HEADER + "ideal P = <x-1, y>\ntrajectory P d rounds 1\n")
    assert "BoundedApprox" in bounded


def test_certificates_flag():
    text = "verify prop42 2\n"
    _, plain = run_text(text)
    _, full = run_text(text, "--certificates")
    assert plain.strip() == "verify prop42 2: true [M=4, i=0..2 replayed, recurrence exact]"
    assert "c_0 =" in full and len(full.splitlines()) > 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "leafkit", "-"],
        input="verify thetalemma 2\n",
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "verify thetalemma 2: true [n=0..2 replayed]\n"
