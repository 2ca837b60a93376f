"""The sweep harness: counters, violations, harvest, and JSON report."""

import json

from tightcut.decompose import BranchTally
from tightcut.instances import CorpusSpec
from tightcut.sweep import run_sweep


def test_named_sweep_counters():
    report = run_sweep(
        [CorpusSpec("named", names=("K4", "PETERSEN", "C2K(3)"))],
        include_fixtures=False, command="unit")
    assert report.command == "unit"
    assert report.ok
    assert report.instances == 3
    # K4 and Petersen have only trivial tight cuts; C6 has three more
    assert report.graphs_with_nontrivial_tight_cut == 1
    assert report.nontrivial_tight_cuts == 3
    assert report.tight_cuts_checked == 4 + 10 + 9
    assert report.decompositions == 3
    assert report.witnesses_verified == 3
    assert report.contraction_checks == 6
    assert report.twosep_cut_checks == 6  # C6's three separations
    assert report.lift_scenarios > 0
    assert report.harvested == []  # C6 cuts are already witnessed
    assert report.elapsed > 0


def test_exhaustive_sweep_is_clean():
    report = run_sweep([CorpusSpec("exhaustive", n=4)],
                       include_fixtures=False)
    assert report.ok
    assert report.instances == 4
    # every matching covered graph on 4 vertices is brick-like: all of
    # its tight cuts are trivial, so nothing needs decomposing
    assert report.nontrivial_tight_cuts == 0
    assert report.decompositions == 0
    assert report.barrier_structure_checks > 0


def test_fixture_sweep_harvests_unwitnessed_cuts():
    report = run_sweep([], include_fixtures=True)
    assert report.ok
    assert report.instances == 5
    labels = {h["label"] for h in report.harvested}
    assert any("blocked_triangle" in lbl for lbl in labels)
    assert any("blocked_pair" in lbl for lbl in labels)
    for h in report.harvested:
        assert set(h) == {"label", "n", "edges", "shore", "r"}
        assert h["r"] >= 2
    assert report.branch_counts.get("barrier_cut_phase", 0) > 0


def test_unfiltered_corpus_surfaces_violations():
    spec = CorpusSpec("exhaustive", n=4, matching_covered_only=False)
    report = run_sweep([spec], include_fixtures=False)
    assert not report.ok
    kinds = {kind for kind, _, _ in report.violations}
    assert kinds <= {"matching_covered", "connectivity"}
    js = report.to_json_dict()
    assert js["ok"] is False
    assert all(set(v) == {"kind", "label", "detail"} for v in js["violations"])
    json.dumps(js)


def test_shared_tally_accumulates():
    tally = BranchTally()
    run_sweep([CorpusSpec("named", names=("C2K(3)",))],
              include_fixtures=False, tally=tally)
    first = dict(tally.counts)
    run_sweep([CorpusSpec("named", names=("C2K(3)",))],
              include_fixtures=False, tally=tally)
    assert tally.counts == {k: 2 * v for k, v in first.items()}


def test_report_json_roundtrip():
    report = run_sweep([CorpusSpec("named", names=("K4",))],
                       include_fixtures=False)
    js = json.loads(json.dumps(report.to_json_dict()))
    assert js["command"] == "sweep"
    assert js["instances"] == 1
    assert js["ok"] is True
