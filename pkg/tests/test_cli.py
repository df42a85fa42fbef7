import json
import subprocess
import sys

import pytest

from singmon.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_relations_brauer(capsys):
    code, out, _ = run(capsys, "relations", "--target", "brauer", "--type", "A", "--n", "4")
    assert code == 0 and "0 failures" in out


def test_kl_json(capsys):
    code, out, _ = run(capsys, "kl", "--type", "A", "--n", "3", "--element", "s1 s2", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    (entry,) = data["elements"]
    assert entry["w"] == "[2,3,1]" or entry["w"] == "[3,1,2]"
    assert entry["kl"]["basis"] == "standard"
    assert len(entry["kl"]["terms"]) == 4


def test_eval_eta(capsys):
    code, out, _ = run(capsys, "eval", "--map", "eta", "--n", "3", "--word", "t1 s2")
    assert code == 0
    rows = out.split()
    assert len(rows) == 3 and all(set(r) <= {"0", "1"} for r in rows)


def test_eval_brauer_loops(capsys):
    code, out, _ = run(capsys, "eval", "--map", "chi", "--n", "3", "--word", "t1 t1", "--json")
    assert code == 0 and json.loads(out)["loops"]["closed"] == 1


def test_desingularize(capsys):
    code, out, _ = run(capsys, "desingularize", "--target", "group", "--type", "A", "--n", "3",
                       "--phi", "x-x^-1", "--word", "t1", "--json")
    assert code == 0 and json.loads(out)["image"] == []
    code, out, _ = run(capsys, "desingularize", "--target", "bool", "--type", "I2", "--m", "3",
                       "--phi", "{0,1}", "--word", "t1", "--json")
    assert code == 0 and len(json.loads(out)["image"]) == 2


def test_enumerate_matches_oracle(capsys):
    code, out, _ = run(capsys, "enumerate", "--target", "istilde", "--n", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["size"] == data["oracle"] == 16


def test_enumerate_emit_elements(capsys):
    code, out, _ = run(capsys, "enumerate", "--target", "sis", "--n", "1", "--json",
                       "--emit-elements")
    assert code == 0 and len(json.loads(out)["elements"]) == 3


def test_enumerate_cap_hit_fails(capsys):
    code, _, _ = run(capsys, "enumerate", "--target", "brauer", "--n", "4", "--cap", "5")
    assert code == 1


def test_odd_skeleton(capsys):
    code, out, _ = run(capsys, "odd-skeleton", "--type", "B", "--n", "3", "--json")
    assert code == 0 and json.loads(out)["components"] == [[0], [1, 2]]


def test_iso_check(capsys):
    code, out, _ = run(capsys, "iso-check", "--n", "2")
    assert code == 0 and "0 failures" in out


def test_sl2_check_reports_failure(capsys):
    code, out, _ = run(capsys, "sl2-check")
    assert code == 1
    assert "FAIL  gamma4 and gamma4' totalizations not isomorphic" in out


def test_usage_errors(capsys):
    assert run(capsys, "kl", "--type", "I2")[0] == 2
    code, _, err = run(capsys, "eval", "--n", "3")
    assert code == 2 and "--word" in err
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "relations", "--target", "nope", "--n", "3")[0] == 2


@pytest.mark.parametrize("argv", [
    ["kl", "--type", "B", "--n", "2", "--json"],
    ["iso-check", "--n", "3", "--pairs", "200", "--seed", "4", "--json"],
    ["enumerate", "--target", "fstar", "--n", "3", "--json", "--emit-elements"],
])
def test_json_is_deterministic(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second and first


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "singmon", "odd-skeleton", "--type", "A",
                           "--n", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "component 0: 1 2 3"
