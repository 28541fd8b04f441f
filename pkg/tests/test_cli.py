import io
import json

import pytest

from betti_forge.checks import default_fixture_dir
from betti_forge.cli import main

FIX = default_fixture_dir()


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(autouse=True)
def no_color(monkeypatch):
    monkeypatch.setenv("BETTI_FORGE_COLOR", "never")


def test_decompose_text():
    code, out, _ = run("decompose", FIX / "example3_9.table")
    assert code == 0
    assert "20 · π(0,3,4,5)" in out
    assert "8 · π(0,3,4)" in out
    assert "integral: yes" in out


def test_decompose_self_dual():
    code, out, _ = run("decompose", FIX / "example4_5.json", "--self-dual")
    assert code == 0
    assert "self-dual with shift 6: pairs (1,3), (2,2)" in out
    code, _, err = run("decompose", FIX / "example4_5.table", "--shift", 5)
    assert code == 1 and "NotSelfDualError" in err


def test_decompose_json():
    code, out, _ = run("decompose", FIX / "example5_8.table", "--format", "json", "--shift", 7)
    data = json.loads(out)
    assert code == 0
    assert [t["coeff"] for t in data["terms"]] == ["72", "48", "48", "72"]
    assert data["self_dual"]["pairs"] == [[1, 4], [2, 3]]


def test_decompose_non_integral(tmp_path):
    path = tmp_path / "t.table"
    path.write_text("0: 3/2 5/2 1\n")
    code, out, _ = run("decompose", path)
    assert code == 0
    assert "[non-integral]" in out and "integral: no" in out


def test_not_in_cone(tmp_path):
    path = tmp_path / "bad.table"
    path.write_text("0: 1 . 1\n")
    code, out, err = run("decompose", path)
    assert code == 1 and out == ""
    assert err.startswith("error: not in the cone") and err.count("\n") == 1


@pytest.mark.parametrize("content", ["0: 1 -1\n", "0: 1\n0: 1\n", '{"entries": [[0, 0]]}', "{oops"])
def test_parse_errors_exit_2(tmp_path, content):
    path = tmp_path / "bad.table"
    path.write_text(content)
    code, _, err = run("decompose", path)
    assert code == 2 and err.startswith("error:")


def test_missing_file_exit_2(tmp_path):
    assert run("decompose", tmp_path / "nope.table")[0] == 2


def test_ferrers_modes():
    hg = FIX / "example3_3.ferrers.json"
    code, out, _ = run("ferrers", hg)
    assert code == 0 and "4 · π(3,4,5)" in out and "agrees" in out
    code, out, _ = run("ferrers", hg, "--quotient")
    assert code == 0 and "20 · π(0,3,4,5)" in out
    assert run("ferrers", hg, "--identity")[1].strip() == "3 = 3 OK"
    assert "alpha: 1 3 2" in run("ferrers", hg, "--alpha")[1]
    data = json.loads(run("ferrers", hg, "--summands", "--format", "json")[1])
    assert len(data["summands"]) == 12


def test_ferrers_rejects_non_order_ideal(tmp_path):
    path = tmp_path / "hg.json"
    path.write_text('{"d": 2, "cells": [[1, 2]]}')
    code, _, err = run("ferrers", path)
    assert code == 1 and "NotOrderIdealError" in err


def test_gorenstein_stacked():
    code, out, _ = run("gorenstein", "--stacked", "--c", 4, "--d", 3)
    assert code == 0
    for label in ("72 · π(0,2,3,4,7)", "48 · π(0,2,3,5,7)", "48 · π(0,2,4,5,7)", "72 · π(0,3,4,5,7)"):
        assert label in out
    assert "h-vector: 1 4 4 1" in out
    assert "pairs (1,4), (2,3)" in out


def test_gorenstein_params_file_and_json():
    code, out, _ = run("gorenstein", "--params", FIX / "example5_8.params.json", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["greedy_agrees"] and data["h_vector"] == [1, 4, 4, 1]


def test_gorenstein_bad_params():
    assert run("gorenstein", "--s", 3, "--t", 2, "--c", 4)[0] == 1
    assert run("gorenstein", "--s", 3)[0] == 1


def test_monomial():
    ideal = FIX / "strongly_stable.ideal.json"
    code, out, _ = run("monomial", ideal, "--to-ferrers")
    assert code == 0 and "x1^3  ->  x1*x2*x3  ->  (1, 1, 1)" in out
    data = json.loads(run("monomial", ideal, "--betti", "--format", "json")[1])
    assert sorted(map(tuple, data["table"]["entries"])) == [(0, 3, "5"), (1, 4, "6"), (2, 5, "2")]


def test_check_bundled():
    code, out, _ = run("check")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("checks passed")
    assert "FAIL" not in out


def test_check_reports_failure(tmp_path):
    (tmp_path / "x.table").write_text("0: 1 . . .\n1: . 6 7 2\n")
    manifest = {"fixtures": [{"name": "x", "table": "x.table",
                              "decomposition": [{"coeff": "21", "sequence": [0, 2, 3, 4]}]}]}
    (tmp_path / "manifest.json").write_text(json.dumps(manifest))
    code, out, _ = run("check", tmp_path / "manifest.json")
    assert code == 1 and "FAIL" in out


def test_color(monkeypatch):
    monkeypatch.setenv("BETTI_FORGE_COLOR", "always")
    out = run("ferrers", FIX / "example3_3.ferrers.json", "--identity")[1]
    assert "\x1b[32mOK\x1b[0m" in out
    monkeypatch.setenv("BETTI_FORGE_COLOR", "auto")
    assert "\x1b" not in run("ferrers", FIX / "example3_3.ferrers.json", "--identity")[1]


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        run("decompose")
    assert exc.value.code == 2
