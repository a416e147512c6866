from __future__ import annotations

import json
import subprocess
import sys

import pytest

from bruijn_mis.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def pair_file(tmp_path):
    def make(kind):
        p = tmp_path / f"{kind}.txt"
        p.write_text(f"# d=2 kind={kind}\n100\n110\n")
        return str(p)
    return make


def test_count_table(capsys):
    code, out, _ = run(capsys, "count", "--d-max", "3")
    assert code == 0
    assert out.strip().splitlines()[-1] == "a_3 = 42"


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--d-max", "2", "--out", "csv")
    assert out.splitlines() == [
        "d,k,b_dk,one_loop_orbits,two_loop_orbits,a_d",
        "1,0,1,1,0,1",
        "2,0,3,2,1,6",
    ]


def test_count_d2(capsys):
    code, out, _ = run(capsys, "count", "--D", "2", "--d", "5", "--out", "csv")
    assert (code, out) == (0, "5,20\n")


def test_verify_pair(capsys, pair_file):
    code, out, _ = run(capsys, "verify", pair_file("code"))
    assert code == 0 and json.loads(out)["comma_free"]
    code, out, _ = run(capsys, "verify", pair_file("with-loops"))
    assert code == 1 and json.loads(out)["error"] == "dependent"


def test_oracle_count(capsys):
    assert run(capsys, "oracle", "--d", "2", "--D", "5", "--count-only")[:2] == (0, "44\n")


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "oracle", "--d", "30", "--D", "3", "--count-only")
    assert code == 3 and json.loads(err)["error"] == "budget-exceeded"


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["count", "--d-max", "three"])
    assert info.value.code == 2
    assert json.loads(capsys.readouterr().err)["error"] == "usage"
    assert run(capsys, "count")[0] == 2


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "verify", str(tmp_path / "nope.json"))
    assert code == 2 and json.loads(err)["error"] == "io"


def test_enumerate_decompose_construct(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--d", "3")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 42
    src = tmp_path / "s.json"
    src.write_text(lines[17])
    trace = tmp_path / "t.json"
    assert run(capsys, "decompose", str(src), "--out", str(trace))[0] == 0
    rebuilt = tmp_path / "r.json"
    assert run(capsys, "construct", str(trace), "--out", str(rebuilt))[0] == 0
    assert json.loads(rebuilt.read_text())["words"] == json.loads(lines[17])["words"]
    # a set carrying its trace verifies the trace too
    code, out, _ = run(capsys, "verify", str(rebuilt))
    assert code == 0 and json.loads(out)["trace_matches"]


def test_orbits_only(capsys):
    code, out, _ = run(capsys, "enumerate", "--d", "4", "--orbits-only")
    assert len(out.splitlines()) == 22
    assert all("trace" in json.loads(line) for line in out.splitlines())


def test_bijection_round_trip(capsys, tmp_path):
    src = tmp_path / "b2.txt"
    src.write_text("000\n010\n111\n")
    code, out, _ = run(capsys, "bijection", str(src), "--to", "loopless")
    assert json.loads(out)["words"] == [[0, 0, 1], [1, 1, 0]]
    lmis = tmp_path / "l.json"
    lmis.write_text(out)
    code, out, _ = run(capsys, "bijection", str(lmis), "--to", "mis")
    assert json.loads(out)["words"] == [[0, 0, 0], [0, 1, 0], [1, 1, 1]]


def test_stabilizer_and_transport(capsys, tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("000\n010\n011\n020\n022\n120\n122\n210\n211\n")
    code, out, _ = run(capsys, "stabilizer", str(g))
    assert json.loads(out) == {"generators": [[1, 2]], "order": 2, "k": 1}
    f = tmp_path / "f.txt"
    f.write_text("000\n010\n011\n")
    fp = tmp_path / "fp.txt"
    fp.write_text("000\n010\n110\n")
    assert run(capsys, "transport", str(f), str(fp))[:2] == (1, '{"perm": null}\n')
    swapped = tmp_path / "sw.txt"
    swapped.write_text("100\n101\n111\n")
    assert run(capsys, "transport", str(f), str(swapped))[:2] == (0, '{"perm": [1, 0]}\n')


def test_graph_outputs(capsys):
    code, out, _ = run(capsys, "graph", "--d", "2", "--out", "edgelist")
    assert len(out.splitlines()) == 14  # self-loops dropped by default
    code, out, _ = run(capsys, "graph", "--d", "2", "--keep-self-loops")
    assert out.count("->") == 16
    code, again, _ = run(capsys, "graph", "--d", "2", "--keep-self-loops")
    assert again == out


def test_commafree(capsys):
    code, out, _ = run(capsys, "commafree", "--d", "2")
    assert json.loads(out)["words"] == [[0, 1, 0], [0, 1, 1]]
    code, out, _ = run(capsys, "commafree", "--d", "3", "--all")
    assert len(out.splitlines()) == 42


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bruijn_mis", "count", "--d-max", "4"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.endswith("a_4 = 408\n")


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.splitlines()[-1] == "11/11 criteria passed"
