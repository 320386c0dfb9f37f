import io
import json
import os
import shutil

import pytest

import cmlocal.report as report
from cmlocal.cli import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, EXIT_STABILIZATION, main
from cmlocal.local import ratliff_rush

from conftest import CORPUS


def ring(name):
    return os.path.join(CORPUS, name + ".ring")


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_invariants_json():
    code, text = run("invariants", ring("wang"), "--no-timings")
    assert code == EXIT_OK
    doc = json.loads(text)
    inv = doc["invariants"]
    assert inv["e"][:3] == [6, 8, 3] and inv["type"] == 3 and inv["r"] == [0, 1]
    assert doc["classification"]["label"] == "next-type"
    assert "timings" not in doc


def test_invariants_deterministic():
    a = run("invariants", ring("gor456"), "--no-timings", "--seed", "5")[1]
    b = run("invariants", ring("gor456"), "--no-timings", "--seed", "5")[1]
    assert a == b


def test_text_renderer():
    code, text = run("invariants", ring("gor456"), "--text")
    assert code == EXIT_OK
    assert "classification: boundary-type" in text and "type: 1" in text


def test_hilbert_with_oracle():
    code, text = run("hilbert", ring("wang"), "--oracle")
    doc = json.loads(text)
    assert code == EXIT_OK
    assert doc["h"] == [1, 3, 0, 3, -1]
    assert all(r["ok"] for r in doc["oracle"])


def test_hilbert_over_rationals():
    code, text = run("hilbert", ring("wang"), "--char", "0", "--text")
    assert code == EXIT_OK and "e: [6, 8, 3, " in text


def test_ratliff_rush_text():
    code, text = run("ratliff-rush", ring("wang"), "--text")
    assert code == EXIT_OK
    assert "r(z) = z" in text and "h~(z) = 1 + 2*z + 3*z^2" in text


def test_verify_refuses_non_cm():
    code, text = run("verify", ring("noncm"))
    assert code == EXIT_OK
    doc = json.loads(text)
    assert {v["status"] for v in doc["classification"]["verdicts"]} == {"not-applicable"}


def test_oracle_does_not_change_invariants():
    plain = json.loads(run("invariants", ring("semigroup_345"), "--no-timings")[1])
    checked = json.loads(run("invariants", ring("semigroup_345"), "--no-timings", "--oracle")[1])
    assert checked.pop("oracle")["all_ok"]
    assert plain == checked


def test_missing_file():
    assert run("invariants", "/nonexistent/x.ring")[0] == EXIT_INPUT


def test_unit_generator(tmp_path):
    f = tmp_path / "unit.ring"
    f.write_text("vars x, y\nideal x + 1, y\n")
    assert run("invariants", str(f))[0] == EXIT_INPUT


def test_bad_characteristic(tmp_path):
    f = tmp_path / "bad.ring"
    f.write_text("char 12\nvars x\nideal x^2\n")
    assert run("hilbert", str(f))[0] == EXIT_INPUT


def test_stabilization_exit(monkeypatch):
    monkeypatch.setattr(report, "ratliff_rush",
                        lambda ring, seq, horizon, budget: ratliff_rush(ring, seq, horizon=horizon, budget=10))
    assert run("invariants", ring("wang"))[0] == EXIT_STABILIZATION


def test_empty_corpus(tmp_path):
    code, text = run("corpus", str(tmp_path))
    assert code == EXIT_OK
    assert json.loads(text)["results"] == []


def test_corrupted_expectation(tmp_path):
    text = open(ring("gor456")).read().replace("expect type 1", "expect type 2")
    (tmp_path / "gor456.ring").write_text(text)
    shutil.copy(ring("semigroup_345"), tmp_path)
    code, out = run("corpus", str(tmp_path), "--no-timings")
    assert code == EXIT_MISMATCH
    res = {r["file"]: r for r in json.loads(out)["results"]}
    assert res["semigroup_345.ring"]["status"] == "pass"
    assert res["gor456.ring"]["mismatches"] == [{"key": "type", "expected": 2, "observed": 1}]
    code, table = run("corpus", str(tmp_path), "--text")
    assert "type: expected 2, got 1" in table and "1/2 files pass" in table


def test_unparsable_corpus_file(tmp_path):
    (tmp_path / "broken.ring").write_text("vars x\nideal x^^2\n")
    code, out = run("corpus", str(tmp_path))
    assert code == EXIT_MISMATCH
    assert json.loads(out)["results"][0]["status"] == "input-error"


def test_unknown_expectation(tmp_path):
    (tmp_path / "odd.ring").write_text("vars x\nideal x^2\nexpect colour blue\n")
    code, out = run("corpus", str(tmp_path))
    assert code == EXIT_MISMATCH
    assert "colour" in json.loads(out)["results"][0]["error"]


def test_parallel_matches_serial(tmp_path):
    for name in ("gor456", "semigroup_345", "noncm"):
        shutil.copy(ring(name), tmp_path)
    a = run("corpus", str(tmp_path), "--no-timings")[1]
    b = run("corpus", str(tmp_path), "--no-timings", "--jobs", "2")[1]
    assert a == b


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"], io.StringIO())
    assert exc.value.code == 2
