import json
import subprocess
import sys

import numpy as np
import pytest

from pseudofin import fixtures
from pseudofin.cli import main
from pseudofin.constructions import e_of_spec, rees_matrix
from pseudofin.errors import ParseError
from pseudofin.io import (
    act_from_json,
    act_to_json,
    parse_json,
    semigroup_from_json,
    semigroup_to_json,
    spec_from_json,
    spec_to_json,
)
from pseudofin.acts import act_of_right_ideal


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def files(tmp_path):
    return {
        "n3": write(tmp_path, "n3.json", semigroup_to_json(fixtures.n3())),
        "o2": write(tmp_path, "o2.json", semigroup_to_json(fixtures.o2())),
        "t2gen": write(tmp_path, "t2gen.json", {"degree": 2, "generators": [[1, 0], [0, 0]]}),
        "rz2": write(tmp_path, "rz2.json", semigroup_to_json(fixtures.rz2())),
        "bad": str(tmp_path / "bad.json"),
        "dir": tmp_path,
    }


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_t2_generators(capsys, files):
    code, out, _ = run(capsys, "info", files["t2gen"])
    assert code == 0
    assert out.startswith("order 4, J-classes 2, kernel right zero of size 2")


def test_info_n3(capsys, files):
    code, out, _ = run(capsys, "info", files["n3"])
    assert code == 0 and "J-trivial" in out and "zero present" in out
    code, out, _ = run(capsys, "info", files["n3"], "--format", "json")
    js = json.loads(out)
    assert js["order"] == 3 and js["zero"] == "0" and js["predicates"]["J_trivial"]


def test_malformed_json(capsys, files, tmp_path):
    (tmp_path / "bad.json").write_text('{"order": 2,\n  "table": [[0, 1], [1, 0]\n')
    code, _, err = run(capsys, "info", files["bad"])
    assert code == 2 and "line 3" in err
    with pytest.raises(ParseError) as info:
        parse_json('{"a": }')
    assert (info.value.line, info.value.column) == (1, 7)


def test_non_associative_input(capsys, tmp_path):
    path = write(tmp_path, "na.json", {"order": 3, "table": [[0, 1, 2], [0, 2, 1], [0, 1, 2]]})
    code, _, err = run(capsys, "info", path)
    assert code == 2 and "(a, b, c)" in err


def test_diameter_n3(capsys, files):
    code, out, _ = run(capsys, "diameter", files["n3"], "--set", "1,a")
    assert code == 0 and "right X-diameter 2" in out
    assert "1 = 1·1 | a·1 = a" in out and "a = 1·a | a·a = 0" in out
    code, out, _ = run(capsys, "diameter", files["n3"], "--set", "1,a", "--format", "json")
    js = json.loads(out)
    assert js["diameter"] == 2 and js["witness"]["pair_labels"] == ["1", "0"]


def test_diameter_min_size_and_left(capsys, files):
    code, out, _ = run(capsys, "diameter", files["n3"], "--min-size", "2", "--format", "json")
    assert code == 0 and json.loads(out)["diameter"] == 2
    code, out, _ = run(capsys, "diameter", files["o2"], "--set", "1,0", "--left", "--format", "json")
    assert json.loads(out)["diameter"] == 1 and json.loads(out)["side"] == "left"


def test_diameter_infinite_and_unknown(capsys, files):
    code, out, _ = run(capsys, "diameter", files["n3"], "--set", "a,0")
    assert code == 0 and "infinite" in out
    code, _, err = run(capsys, "diameter", files["n3"], "--set", "1,b")
    assert code == 2 and "no element named 'b'" in err


def test_budget_env(capsys, files, monkeypatch):
    monkeypatch.setenv("PSEUDOFIN_BUDGET", "2")
    code, _, err = run(capsys, "diameter", files["n3"], "--min-size", "3")
    assert code == 2 and "evaluated" in err
    monkeypatch.setenv("PSEUDOFIN_BUDGET", "many")
    code, _, _ = run(capsys, "info", files["n3"])
    assert code == 2


def test_congruence_and_green(capsys, files, tmp_path):
    t2 = write(tmp_path, "t2.json", semigroup_to_json(fixtures.t2()))
    code, out, _ = run(capsys, "congruence", t2, "--pairs", "id:c0", "--format", "json")
    assert code == 0 and json.loads(out)["classes"] == [["id", "c0"], ["s", "c1"]]
    act = write(tmp_path, "act.json", act_to_json(act_of_right_ideal(fixtures.t2(), [2, 3])))
    code, out, _ = run(capsys, "congruence", "--act", act, "--pairs", "0:1", "--format", "json")
    assert json.loads(out)["universal"]
    code, out, _ = run(capsys, "green", t2, "--format", "json")
    assert json.loads(out)["L"] == [["id", "s"], ["c0"], ["c1"]]
    code, out, _ = run(capsys, "kernel", t2, "--format", "json")
    js = json.loads(out)
    assert js["elements"] == ["c0", "c1"] and js["rees"]["I_size"] == 1 and js["rees"]["J_size"] == 2


def test_construct(capsys, tmp_path):
    eof = write(tmp_path, "eof.json", {"S": semigroup_to_json(fixtures.trivial()), "x": 0})
    code, out, _ = run(capsys, "construct", "e-of", eof, "--format", "json")
    assert code == 0 and json.loads(out)["order"] == 6
    rees = write(tmp_path, "rees.json", {"T": semigroup_to_json(fixtures.z2()), "I_size": 2, "J_size": 2,
                                          "P": [[0, 0], [0, 1]]})
    out_path = str(tmp_path / "m.json")
    code, _, _ = run(capsys, "construct", "rees", rees, "-o", out_path)
    M = semigroup_from_json(json.loads(open(out_path).read()))
    assert M.order == 8
    # round trip: re-parsed output equals the in-memory construction
    assert np.array_equal(M.table, rees_matrix(fixtures.z2(), 2, 2, [[0, 0], [0, 1]]).semigroup.table)
    const = write(tmp_path, "c.json", {"S": semigroup_to_json(fixtures.z2())})
    code, out, _ = run(capsys, "construct", "constants", const, "--format", "json")
    assert json.loads(out)["order"] == 4


def test_construct_broken_compatibility(capsys, tmp_path):
    spec = spec_to_json(e_of_spec(fixtures.z2(), 0))
    spec["P"][0][1] = 1 - spec["P"][0][1]
    path = write(tmp_path, "broken.json", spec)
    code, _, err = run(capsys, "construct", "extension", path)
    assert code == 2 and "error" in err


def test_spec_and_act_round_trip():
    spec = e_of_spec(fixtures.n3(), 0)
    back = spec_from_json(json.loads(json.dumps(spec_to_json(spec))))
    assert np.array_equal(back.P, spec.P) and np.array_equal(back.left_action, spec.left_action)
    A = act_of_right_ideal(fixtures.t2(), [2, 3])
    B = act_from_json(json.loads(json.dumps(act_to_json(A))))
    assert np.array_equal(A.action, B.action)
    S = fixtures.t2()
    assert semigroup_from_json(semigroup_to_json(S)) == S


def test_verify_all_fixtures(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all")
    assert code == 0 and "0 failed" in out


def test_verify_rr_random(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rr", "--random", "50", "--degree", "4", "--seed", "7",
                       "--no-fixtures", "--format", "json")
    js = json.loads(out)
    assert code == 0 and js["checks"] == 50
    assert all(len(e["measured"]) == 4 and len(set(e["measured"])) == 1 for e in js["entries"])


def test_verify_lifts_non_monoid(capsys, files):
    code, out, _ = run(capsys, "verify", "--suite", "csmi", "--input", files["rz2"], "--no-fixtures", "--format", "json")
    js = json.loads(out)
    assert code == 0 and all("identity adjoined" in e["notes"][0] for e in js["entries"])


def test_verify_failure_exit_code(capsys, monkeypatch, tmp_path):
    from pseudofin import theorems

    real = theorems.check_kernel

    def broken(S, instance=""):
        rep = real(S, instance)
        rep.passed = False
        return rep

    monkeypatch.setattr(theorems, "check_kernel", broken)
    code, out, _ = run(capsys, "verify", "--suite", "kernel", "--dump-dir", str(tmp_path / "dumps"))
    assert code == 1 and "FAIL" in out and "dumped to" in out


def test_random_command_is_deterministic(capsys):
    _, a, _ = run(capsys, "random", "--degree", "3", "--seed", "5")
    _, b, _ = run(capsys, "random", "--degree", "3", "--seed", "5")
    assert a == b and json.loads(a)["identity"] is not None


def test_console_entry_points(files):
    proc = subprocess.run([sys.executable, "-m", "pseudofin", "info", files["n3"]], capture_output=True, text=True)
    assert proc.returncode == 0 and "zero present" in proc.stdout
    proc = subprocess.run(["pseudofin", "info", files["bad"]], capture_output=True, text=True)
    assert proc.returncode == 2
