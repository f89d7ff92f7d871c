import io
import json
import subprocess
import sys

import pytest

from traceideals import ideal_from_generators, semigroup_from_generators
from traceideals.cli import execute, run, run_batch


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def test_analyze():
    got = call_json("analyze", "--gens", "3,4")
    expected = {"gaps": [1, 2, 5], "frobenius": 5, "conductor": 6, "genus": 3,
                "symmetric": True, "multiplicity": 3}
    assert {k: got[k] for k in expected} == expected
    assert got["semigroup"] == {"gens": [3, 4], "conductor": 6, "gaps": [1, 2, 5]}


def test_analyze_whole_line():
    got = call_json("analyze", "--gens", "1")
    assert got["frobenius"] == -1 and got["conductor"] == 0


def test_trace():
    got = call_json("ideal", "trace", "--gens", "5,6,7", "--ideal", "6,10,14")
    assert got["trace"] == [6, 7, 10] and got["is_trace"] is False
    assert got["ideal"] == {"gens": [6, 10, 14]}


def test_classify():
    got = call_json("classify", "--gens", "4,5")
    assert got["gorenstein_small"] == "not_small"
    assert got["finite_overrings"] is False
    assert got["note"].startswith("assumes infinite residue field")


@pytest.mark.parametrize("op,extra,key,expected", [
    ("subtrace", [], "subtrace", [38, 42, 44, 50]),
    ("dual", [], "dual", [0, 6]),
    ("dual-chain", [], "dual_power_chain", [[0, 6], [0, 6, 12], [0, 6, 12, 18]]),
    ("shift", ["--by", "3"], "shift", [17, 53]),
    ("sum", ["--other", "20"], "sum", [14, 20]),
    ("intersect", ["--other", "20"], "intersect", [34, 50]),
])
def test_ideal_ops_seven_ten(op, extra, key, expected):
    got = call_json("ideal", op, "--gens", "7,10", "--ideal", "14,50", *extra)
    assert got[key] == expected


def test_star_and_zero():
    got = call_json("ideal", "star", "--gens", "3,4", "--ideal", "3,4", "--other", "4,6")
    assert got["star"] == [4, 6]
    got = call_json("ideal", "star", "--gens", "3,4", "--ideal", "zero", "--other", "4,6")
    assert got["star"] == []
    code, _, err = call("ideal", "trace", "--gens", "3,4", "--ideal", "zero")
    assert code == 1 and "zero ideal" in err


def test_enumerate():
    got = call_json("enumerate", "--gens", "3,4")
    assert got["trace_ideals"] == [[0], [3, 4], [4, 6], [6, 7, 8]]
    assert got["bijective"] is True
    proper = call_json("enumerate", "--gens", "3,4", "--proper")
    assert proper["trace_ideals"] == [[3, 4], [4, 6], [6, 7, 8]]
    tree = call_json("enumerate", "--genus-max", "3")
    assert tree["counts_by_genus"] == [1, 1, 2, 4]


def test_report():
    got = call_json("analyze", "--gens", "3,4", "--ideal", "3,8")
    assert got["report"]["trace"] == [3, 4]
    assert got["report"]["subtrace"] == [6, 7, 8]


@pytest.mark.parametrize("argv,code", [
    (["analyze", "--gens", "4,6"], 1),
    (["enumerate", "--gens", "5,6,7", "--max-small", "1"], 1),
    (["ideal", "trace", "--gens", "3,4", "--ideal", "1"], 1),
    (["ideal", "subtrace", "--gens", "5,6,7", "--ideal", "6"], 1),
    (["ideal", "trace", "--gens", "3,4", "--ideal=-1,3"], 2),
    (["analyze", "--gens", "3,x"], 2),
    (["analyze", "--gens", "3,4", "--bogus"], 2),
    (["frobnicate"], 2),
    (["ideal", "sum", "--gens", "3,4", "--ideal", "3"], 2),
    (["enumerate"], 2),
])
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code
    assert out == "" and err


def test_relative_flag():
    got = call_json("ideal", "dual", "--gens", "3,4", "--ideal=-1,3", "--relative")
    H = semigroup_from_generators([3, 4])
    assert got["ideal"]["gens"] == list(ideal_from_generators(H, [-1]).min_gens)
    assert got["dual"] == list(ideal_from_generators(H, [1]).min_gens)


def test_round_trip():
    got = call_json("analyze", "--gens", "6,4,9,13", "--ideal", "8,13,4,15,17,18,19")
    H = semigroup_from_generators(got["semigroup"]["gens"])
    assert list(H.generators) == got["semigroup"]["gens"]
    E = ideal_from_generators(H, got["ideal"]["gens"])
    assert list(E.min_gens) == got["ideal"]["gens"]
    for key in ("trace", "subtrace", "reflexive_hull", "integral_closure"):
        gens = got["report"][key]
        assert list(ideal_from_generators(H, gens).min_gens) == gens


def test_byte_identical():
    argv = ("enumerate", "--gens", "4,5,7")
    assert call(*argv) == call(*argv)


def test_table_format():
    code, out, _ = call("--format", "table", "analyze", "--gens", "3,4")
    assert code == 0
    assert "frobenius" in out and "1,2,5" in out


def test_batch_preserves_order():
    lines = [
        "classify --gens 2,7",
        "# comment",
        "analyze --gens 4,6",
        "ideal trace --gens 3,4 --ideal 3,8",
        "nonsense",
    ]
    out = io.StringIO()
    code = run_batch(lines, jobs=4, out=out)
    rows = [json.loads(x) for x in out.getvalue().splitlines()]
    assert code == 2
    assert len(rows) == 4
    assert rows[0]["gorenstein_small"] == "small"
    assert rows[1]["line"] == 3 and rows[1]["exit_code"] == 1
    assert rows[2]["trace"] == [3, 4]
    assert rows[3]["exit_code"] == 2


def test_verify_small():
    code, payload = execute(["verify", "--genus-max", "3"])
    assert payload["passed"] and code == 0
    names = [c["name"] for c in payload["checks"]]
    assert "symmetric: star distributes over sum" in names


def test_console_entry_point(tmp_path):
    jobs = tmp_path / "jobs.txt"
    jobs.write_text("analyze --gens 3,5\n")
    proc = subprocess.run([sys.executable, "-m", "traceideals.cli", "batch", str(jobs)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["conductor"] == 8
