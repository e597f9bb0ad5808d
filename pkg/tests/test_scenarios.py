import json
import os
import subprocess
import sys

import pytest

from braidhopf.errors import ScenarioError
from braidhopf import cli
from braidhopf.scenario import (
    CHECK_KINDS,
    emit,
    load,
    parse_machine_report,
    run,
)

SCEN = os.path.join(os.path.dirname(__file__), "..", "scenarios")
POSITIVE = [
    "trivial.json",
    "group_algebra_z2.json",
    "sweedler_structure_theorem.json",
    "sweedler_yd_equivalence.json",
    "taft_3_7.json",
    "braided_line_mirror.json",
]
NEGATIVE = [
    "negative_structure.json",
    "negative_braided_line.json",
    "negative_modules.json",
    "negative_dsl.json",
    "negative_projection.json",
]
CORPUS = POSITIVE + NEGATIVE


def spath(name):
    return os.path.join(SCEN, name)


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_passes(name):
    sc = load(spath(name))
    report = run(sc)
    assert report.ok, emit(report, "human")


def test_corpus_covers_every_check_kind():
    used = set()
    for name in CORPUS:
        sc = load(spath(name))
        used.update(c.kind for c in sc.checks)
    assert used == set(CHECK_KINDS), sorted(set(CHECK_KINDS) - used)


def test_minimal_inline_scenario(tmp_path):
    doc = {
        "schema": "braidhopf-scenario/1",
        "name": "inline",
        "field": {"kind": "rational"},
        "objects": {"K": [["1", []]]},
        "morphisms": {"one": {"domain": "K", "codomain": "K", "rows": [["1"]]}},
        "structures": {"K": {"level": "hopf", "carrier": "K", "m": "one",
                             "eta": "one", "delta": "one", "eps": "one", "s": "one"}},
        "checks": [{"name": "ax", "kind": "structure", "structure": "K"}],
    }
    p = tmp_path / "inline.json"
    p.write_text(json.dumps(doc))
    report = run(load(p))
    assert report.ok


def test_float_literal_rejected(tmp_path):
    p = tmp_path / "f.json"
    p.write_text('{"schema": "braidhopf-scenario/1", "name": "x", '
                 '"field": {"kind": "rational"}, "objects": {}, '
                 '"checks": [], "extra": 1.5}')
    with pytest.raises(ScenarioError, match="floating point"):
        load(p)


def test_wrong_order_bicharacter_rejected():
    with pytest.raises(ScenarioError, match="not killed by the orders"):
        load(spath("negative_load_bicharacter.json"))


def test_dangling_reference_rejected(tmp_path):
    doc = {
        "schema": "braidhopf-scenario/1",
        "name": "dangling",
        "field": {"kind": "rational"},
        "morphisms": {"f": {"domain": "Missing", "codomain": "Missing", "rows": []}},
        "checks": [],
    }
    p = tmp_path / "d.json"
    p.write_text(json.dumps(doc))
    with pytest.raises(ScenarioError, match="unknown object"):
        load(p)


def test_invalid_structure_rejected_at_load(tmp_path):
    doc = {
        "schema": "braidhopf-scenario/1",
        "name": "badstruct",
        "field": {"kind": "rational"},
        "objects": {"K": [["1", []]]},
        "morphisms": {"one": {"domain": "K", "codomain": "K", "rows": [["1"]]},
                      "two": {"domain": "K", "codomain": "K", "rows": [["2"]]}},
        "structures": {"K": {"level": "hopf", "carrier": "K", "m": "one",
                             "eta": "two", "delta": "one", "eps": "one", "s": "one"}},
        "checks": [],
    }
    p = tmp_path / "b.json"
    p.write_text(json.dumps(doc))
    with pytest.raises(ScenarioError):
        load(p)


def test_selection_and_empty_selection():
    sc = load(spath("trivial.json"))
    report = run(sc, selection=["hopf_axioms"])
    assert report.ok and len(report.results) == 1
    empty = run(sc, selection=[])
    assert empty.ok and empty.results == []
    with pytest.raises(ScenarioError, match="unknown check name"):
        run(sc, selection=["nope"])


def test_machine_report_roundtrip():
    sc = load(spath("trivial.json"))
    text = emit(run(sc), "machine")
    doc = parse_machine_report(text)
    again = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    assert again == text


def test_machine_report_determinism_spot_check():
    # the full-corpus version is acceptance criterion 10
    for name in ("trivial.json", "braided_line_mirror.json"):
        sc1 = load(spath(name))
        sc2 = load(spath(name))
        assert emit(run(sc1), "machine") == emit(run(sc2), "machine")


def test_failing_check_named_in_report(tmp_path):
    doc = {
        "schema": "braidhopf-scenario/1",
        "name": "failing",
        "field": {"kind": "rational"},
        "examples": {"broken": {"kind": "perturbed", "base": "sweedler",
                                "which": "m", "entry": [0, 0], "delta": "1"}},
        "checks": [{"name": "should_fail", "kind": "structure",
                    "structure": "broken"}],
    }
    p = tmp_path / "fail.json"
    p.write_text(json.dumps(doc))
    report = run(load(p))
    assert not report.ok
    bad = [r for r in report.results if not r.ok]
    assert bad[0].name == "should_fail"
    human = emit(report, "human")
    assert "should_fail" in human and "FAIL" in human
    machine = parse_machine_report(emit(report, "machine"))
    failing = [c for c in machine["checks"] if not c["ok"]]
    assert failing[0]["name"] == "should_fail"
    assert any("=" in (it.get("residual") or "") for it in failing[0]["items"])


def test_cli_exit_codes(tmp_path):
    assert cli.main(["run", spath("trivial.json")]) == 0
    assert cli.main(["run", spath("negative_load_bicharacter.json")]) == 2
    assert cli.main(["run", "/nonexistent/file.json"]) == 2
    doc = {
        "schema": "braidhopf-scenario/1",
        "name": "failing",
        "field": {"kind": "rational"},
        "examples": {"broken": {"kind": "perturbed", "base": "sweedler",
                                "which": "m", "entry": [0, 0], "delta": "1"}},
        "checks": [{"name": "should_fail", "kind": "structure",
                    "structure": "broken"}],
    }
    p = tmp_path / "fail.json"
    p.write_text(json.dumps(doc))
    assert cli.main(["run", str(p)]) == 1
    assert cli.main(["run", spath("trivial.json"), "--list-checks"]) == 0
    assert cli.main(["run", spath("trivial.json"), "--check", "hopf_axioms",
                     "--format", "machine"]) == 0


def test_cli_subprocess_entry():
    out = subprocess.run(
        [sys.executable, "-m", "braidhopf.cli", "run", spath("trivial.json"),
         "--format", "machine"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0
    doc = parse_machine_report(out.stdout)
    assert doc["summary"]["passed"] == doc["summary"]["total"]
