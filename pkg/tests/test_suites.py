import json

import pytest

from ptopo.constructions import all_topologies
from ptopo.errors import BudgetExceeded, InvalidArgument
from ptopo.io import serialize
from ptopo.suites import SUITES, Source, run_suite


def _only(reports):
    assert len(reports) == 1
    return reports[0]


def test_cor_2_3_on_all_three_point_topology_pairs():
    rep = _only(run_suite("cor-2.3", Source.parse("topologies:3")))
    law = rep.laws[0]
    assert law.passed == len(all_topologies(3)) ** 2 == 841
    assert law.failed == 0 and law.skipped == 0


def test_prop_3_4_random_four_points():
    rep = _only(run_suite("prop-3.4", Source.parse("random:4:1000", seed=1)))
    assert rep.laws[0].passed == 1000 and rep.ok


def test_thm_1_2_on_two_points():
    rep = _only(run_suite("thm-1.2", Source.parse("enumerate:2")))
    assert [(l.passed, l.failed) for l in rep.laws] == [(4, 0), (4, 0)]


def test_every_suite_passes_on_two_and_three_points():
    for source in ("enumerate:2", "random:3:40"):
        for rep in run_suite("all", Source.parse(source, seed=5)):
            assert rep.ok, rep.text()
    assert {r.suite for r in run_suite("all", Source.parse("enumerate:1"))} == set(SUITES)


def test_reports_are_deterministic():
    a = [r.to_json() for r in run_suite("all", Source.parse("random:3:15", seed=7))]
    b = [r.to_json() for r in run_suite("all", Source.parse("random:3:15", seed=7))]
    assert json.dumps(a) == json.dumps(b)


def test_failure_records_first_counterexample(monkeypatch):
    from ptopo import suites

    calls = []

    def broken(q):
        calls.append(q)
        return len(calls) != 2

    monkeypatch.setitem(suites.SUITES, "broken", suites.Suite("broken", 1, (("always", broken),)))
    rep = _only(run_suite("broken", Source.parse("enumerate:2")))
    assert rep.laws[0].failed == 1 and not rep.ok
    assert rep.laws[0].counterexample[0]["points"] == ["a", "b"]
    assert serialize(calls[1]) == json.dumps(rep.laws[0].counterexample[0], separators=(",", ":"))
    assert "FAIL" in rep.text()


def test_file_source(tmp_path, p3):
    path = tmp_path / "p3.json"
    path.write_text(serialize(p3))
    rep = _only(run_suite("closed-forms", Source.parse(f"files:{path}")))
    assert rep.laws[0].passed == 1
    assert "files(" in rep.source


def test_errors():
    with pytest.raises(InvalidArgument):
        run_suite("thm-9.9", Source.parse("enumerate:2"))
    for bad in ("enumerate:x", "random:3", "everything:2"):
        with pytest.raises(InvalidArgument):
            Source.parse(bad)
    with pytest.raises(BudgetExceeded):
        run_suite("thm-4.2-universal", Source.parse("enumerate:3"), budget_ms=0)
