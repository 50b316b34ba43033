import io
import json
import subprocess
import sys

import pytest

from wienerblocks.cli import parse_range, run


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = run(argv, out, err)
    finally:
        sys.stdin = old
    rows = [json.loads(line) for line in out.getvalue().splitlines()]
    return code, rows, err.getvalue()


def test_wiener_c4():
    code, rows, _ = call(["wiener"], "Cl\n")
    assert code == 0
    assert rows == [{"graph6": "Cl", "n": 4, "w": 8, "transmissions": [4, 4, 4, 4], "eccentricities": [2, 2, 2, 2]}]


def test_wiener_reads_file(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("Cl\n\nC~\n")
    code, rows, _ = call(["wiener", str(f)])
    assert code == 0 and [r["w"] for r in rows] == [8, 6]


def test_malformed_line_reports_line_number():
    code, rows, err = call(["wiener"], "Cl\nC~\nZZZ\n")
    assert code == 2
    assert "line 3" in err
    assert len(rows) == 2


def test_disconnected_line_gives_error_object():
    code, rows, _ = call(["wiener"], "E???\nCl\n")
    assert code == 2
    assert rows[0] == {"line": 1, "graph6": "E???", "error": "graph is disconnected"}
    assert rows[1]["w"] == 8


def test_blocks_output():
    code, rows, _ = call(["blocks"], "ElCG\n")
    assert code == 0
    row = rows[0]
    assert row["p"] == 3 and row["cut_vertices"] == [3, 4]
    assert [b["kind"] for b in row["blocks"]] == ["terminal", "traversal", "terminal"]
    assert row["tree"]["edges"] == [[0, 3], [1, 3], [1, 4], [2, 4]]


def test_family_two_cycles():
    code, rows, _ = call(["family", "--a", "8", "--b", "2", "--p", "2"])
    assert code == 0
    assert rows[0]["w"] == 88 and rows[0]["n"] == 9
    assert rows[0]["graph6"] == "HhCGGD@"


@pytest.mark.parametrize(
    "argv,w",
    [
        (["family", "--kind", "cycle", "--n", "7"], 42),
        (["family", "--kind", "path", "--n", "5"], 20),
        (["family", "--kind", "spider", "--k", "3", "--t", "2"], 48),
        (["family", "--kind", "theta", "--a", "2", "--b", "2", "--c", "4"], None),
    ],
)
def test_family_kinds(argv, w):
    code, rows, _ = call(argv)
    assert code == 0
    if w is not None:
        assert rows[0]["w"] == w
    if "w_closed" in rows[0]:
        assert rows[0]["w_closed"] == rows[0]["w"]


def test_family_missing_parameter():
    code, _, err = call(["family", "--kind", "theta", "--a", "2"])
    assert code == 2 and "--b" in err
    assert call(["family", "--a", "1", "--b", "3", "--p", "2"])[0] == 2


def test_climb_trace():
    code, rows, _ = call(["climb"], "E?zw\n")
    assert code == 0
    row = rows[0]
    assert row["fixpoint_w"] == row["w"] + sum(s["delta_w"] for s in row["trace"])
    assert all(s["delta_w"] > 0 for s in row["trace"])


def test_search():
    code, rows, _ = call(["search", "--n", "5", "--p", "2..3"])
    assert code == 0
    assert [(r["n"], r["p"]) for r in rows] == [(5, 2), (5, 3)]
    assert list(rows[0]) == ["n", "p", "max_w", "extremal", "family_match", "witness_params"]
    assert call(["search", "--n", "5", "--p", "5"])[0] == 2


def test_verify_main_passes():
    code, rows, _ = call(["verify", "--main", "--n", "4..8"])
    assert code == 0
    assert rows[-1] == {"check": "summary", "passed": True, "reports": 5}


def test_verify_multiple_checks():
    code, rows, _ = call(["verify", "--two-cycle", "--kdist", "--n", "7", "--k", "3"])
    assert code == 0
    assert [r["check"] for r in rows] == ["two_cycle", "kdist", "summary"]


def test_verify_failure_exit_code():
    # the literal theta equality claim fails at n = 5
    code, rows, _ = call(["verify", "--theta", "--n", "5"])
    assert code == 1
    assert rows[0]["passed"] is False and rows[-1]["passed"] is False


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["verify", "--n", "5"],
        ["verify", "--main", "--n", "2"],
        ["verify", "--main", "--n", "x"],
        ["verify", "--kdist", "--n", "6", "--k", "6"],
        ["search", "--n", "4", "--jobs", "0"],
        ["wiener", "/nonexistent/file"],
    ],
)
def test_usage_errors(argv):
    assert call(argv)[0] == 2


def test_parse_range():
    assert parse_range("4..8") == [4, 5, 6, 7, 8]
    assert parse_range("3,5,7") == [3, 5, 7]
    assert parse_range("6") == [6]


def test_output_is_byte_identical_across_runs():
    cmd = [sys.executable, "-m", "wienerblocks", "search", "--n", "6"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second and first.count("\n") == 5


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "wienerblocks", "wiener"], input="Cl\n", capture_output=True, text=True
    )
    assert res.returncode == 0 and json.loads(res.stdout)["w"] == 8
