"""Corpus sweeps: run every structural check we have over graph families.

A sweep walks a corpus and, per graph, re-proves the package's claims
with independent primitives: contractions of tight cuts stay matching
covered and tightness transfers along edge ids in both directions,
every witness reported for a tight cut is re-verified from scratch,
barriers are independent with no even components and their cuts are
tight, two-separation cuts are tight, barrier lifts land on barriers,
and the strict-barrier search succeeds under both strategies. Anything
that fails lands in the report's violations list instead of raising, so
one bad graph cannot hide the rest.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .cuts import classify_cut, enumerate_tight_cuts, is_tight
from .decompose import BranchTally, decompose_tight_cut, find_noncrossing_witness
from .graph import Cut, Graph
from .instances import CorpusSpec, canonical, enumerate_corpus, fixture_instances
from .matching import is_matching_covered
from .structure import (
    enumerate_barriers,
    find_2separations,
    find_strict_barrier,
    is_barrier,
    is_strict_barrier,
    lift_barrier_over_2sep,
    lift_barrier_over_odd_component,
    make_two_separation,
    two_separation_cuts,
)
from .verify import verify_certificate

_LIFT_BARRIER_CAP = 3
_LIFT_INNER_CAP = 5
_LIFT_2SEP_CAP = 2
_LIFT_2SEP_INNER_CAP = 3
_STRICT_SETUP_CAP = 4


@dataclass
class SweepReport:
    command: str
    instances: int = 0
    graphs_with_nontrivial_tight_cut: int = 0
    tight_cuts_checked: int = 0
    nontrivial_tight_cuts: int = 0
    witnesses_verified: int = 0
    contraction_checks: int = 0
    transfer_checks: int = 0
    barrier_structure_checks: int = 0
    twosep_cut_checks: int = 0
    lift_scenarios: int = 0
    strict_barrier_instances: int = 0
    decompositions: int = 0
    violations: list = field(default_factory=list)
    branch_counts: dict = field(default_factory=dict)
    harvested: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "command": self.command,
            "ok": self.ok,
            "instances": self.instances,
            "graphs_with_nontrivial_tight_cut":
                self.graphs_with_nontrivial_tight_cut,
            "tight_cuts_checked": self.tight_cuts_checked,
            "nontrivial_tight_cuts": self.nontrivial_tight_cuts,
            "witnesses_verified": self.witnesses_verified,
            "contraction_checks": self.contraction_checks,
            "transfer_checks": self.transfer_checks,
            "barrier_structure_checks": self.barrier_structure_checks,
            "twosep_cut_checks": self.twosep_cut_checks,
            "lift_scenarios": self.lift_scenarios,
            "strict_barrier_instances": self.strict_barrier_instances,
            "decompositions": self.decompositions,
            "violations": [
                {"kind": kind, "label": label, "detail": detail}
                for kind, label, detail in self.violations],
            "branch_counts": dict(self.branch_counts),
            "harvested": list(self.harvested),
            "elapsed": self.elapsed,
        }


def _flag(report: SweepReport, kind: str, label: str, detail: str) -> None:
    report.violations.append((kind, label, detail))


def _check_contractions(label: str, g: Graph, c: Cut, all_cuts,
                        report: SweepReport) -> None:
    g_shore, g_other = g.cut_contractions(c)
    for gi, kept in ((g_shore, c.shore), (g_other, c.other_shore)):
        if not is_matching_covered(gi):
            _flag(report, "contraction", label,
                  f"contraction onto {sorted(kept)} is not matching covered")
            continue
        image = gi.cut_from_edge_ids(c.edge_ids)
        if not is_tight(gi, image):
            _flag(report, "contraction", label,
                  f"cut image in the contraction onto {sorted(kept)} "
                  "is not tight")
        report.contraction_checks += 1
        # upward transfer: every tight cut of the contraction lifts,
        # by edge ids, to a tight cut of the host
        for di in enumerate_tight_cuts(gi):
            lifted = g.cut_from_edge_ids(di.edge_ids)
            if not is_tight(g, lifted):
                _flag(report, "transfer", label,
                      f"tight cut {sorted(di.shore)} of the contraction "
                      "lifts to a non-tight cut")
            report.transfer_checks += 1
        # downward transfer: tight cuts of the host living inside the
        # kept shore stay tight in the contraction
        for d in all_cuts:
            if d.shore <= kept or d.other_shore <= kept:
                if not is_tight(gi, gi.cut_from_edge_ids(d.edge_ids)):
                    _flag(report, "transfer", label,
                          f"tight cut {sorted(d.shore)} of the host "
                          "maps to a non-tight cut")
                report.transfer_checks += 1


def _verify_finding(label: str, g: Graph, c: Cut, finding,
                    report: SweepReport) -> None:
    """Re-check a witness finding using only first-principles primitives."""
    problems = []
    if finding.reference != c:
        problems.append("finding does not reference the input cut")
    w = finding.cut
    if w.is_trivial:
        problems.append("witness cut is trivial")
    if w.crosses(c):
        problems.append("witness cut crosses the reference cut")
    if not is_tight(g, w):
        problems.append("witness cut is not tight")
    if finding.kind == "barrier":
        b = finding.barrier
        if finding.shore not in c.shores():
            problems.append("barrier shore is not a reference shore")
        checked = None if b is None else is_barrier(g, b.members)
        if checked is None:
            problems.append("witness is not a barrier")
        else:
            if not checked.is_nontrivial:
                problems.append("witness barrier is trivial")
            if not (b.members < finding.shore):
                problems.append("barrier not properly inside its shore")
            comps = set(g.components_without(checked.members))
            holder = None
            for shore in w.shores():
                if shore in comps:
                    holder = shore
                    break
            if holder is None:
                problems.append("witness cut is not a barrier cut")
            else:
                opposite = (c.other_shore if finding.shore == c.shore
                            else c.shore)
                if not opposite <= holder:
                    problems.append(
                        "barrier cut shore does not hold the opposite shore")
    elif finding.kind == "twosep":
        s = finding.twosep
        try:
            rebuilt = make_two_separation(g, s.pair, s.side1, s.side2)
        except Exception as exc:
            problems.append(f"witness is not a two-separation: {exc}")
        else:
            if rebuilt != s:
                problems.append("two-separation does not match its rebuild")
            if w not in two_separation_cuts(g, s):
                problems.append("witness cut not generated by the pair")
    else:
        problems.append(f"unknown witness kind {finding.kind!r}")
    for problem in problems:
        _flag(report, "witness", label, problem)
    if not problems:
        report.witnesses_verified += 1


def _check_cut(label: str, g: Graph, c: Cut, all_cuts, report: SweepReport,
               tally: BranchTally) -> None:
    cut_label = f"{label}:shore{sorted(c.shore)}"
    try:
        _check_contractions(cut_label, g, c, all_cuts, report)
    except Exception as exc:
        _flag(report, "contraction", cut_label, repr(exc))
    try:
        finding = find_noncrossing_witness(g, c, tally)
        _verify_finding(cut_label, g, c, finding, report)
    except Exception as exc:
        _flag(report, "witness", cut_label, repr(exc))
    try:
        cls = classify_cut(g, c)
        cert = decompose_tight_cut(g, c, tally)
        report.decompositions += 1
        result = verify_certificate(g, c, cert.to_json_dict())
        if not result.ok:
            _flag(report, "certificate", cut_label,
                  "; ".join(f"{code} at {path}"
                            for code, path in result.failures))
        if cls.witnessed != (cert.r == 1):
            _flag(report, "certificate", cut_label,
                  f"witnessed={cls.witnessed} but r={cert.r}")
        if not cls.witnessed:
            report.harvested.append({
                "label": cut_label,
                "n": g.n,
                "edges": [list(g.edge_ends(eid)) for eid in g.edge_ids],
                "shore": sorted(c.shore),
                "r": cert.r,
            })
    except Exception as exc:
        _flag(report, "certificate", cut_label, repr(exc))


def _check_barriers(label: str, g: Graph, report: SweepReport) -> None:
    for b in enumerate_barriers(g):
        if g.induced(b.members).m:
            _flag(report, "barrier", label,
                  f"barrier {sorted(b.members)} is not independent")
        parts = g.components_without(b.members)
        if len(parts) != len(b.odd_parts):
            _flag(report, "barrier", label,
                  f"barrier {sorted(b.members)} leaves an even component")
        for part in b.odd_parts:
            d = g.boundary(part)
            if not is_tight(g, d):
                _flag(report, "barrier", label,
                      f"barrier cut at {sorted(part)} is not tight")
        report.barrier_structure_checks += 1


def _check_twoseps(label: str, g: Graph, report: SweepReport) -> None:
    for s in find_2separations(g):
        for d in two_separation_cuts(g, s):
            if d.is_trivial:
                _flag(report, "twosep", label,
                      f"two-separation {s.pair} generates a trivial cut")
            if not is_tight(g, d):
                _flag(report, "twosep", label,
                      f"two-separation {s.pair} generates a non-tight cut")
            report.twosep_cut_checks += 1


def _lift_scenarios(label: str, g: Graph, report: SweepReport) -> None:
    nontrivial = [b for b in enumerate_barriers(g) if b.is_nontrivial]
    for b in nontrivial[:_LIFT_BARRIER_CAP]:
        for y in b.odd_parts:
            inner = g.contract(g.vertex_set - y, g.fresh_vertex())
            for bp in enumerate_barriers(inner)[:_LIFT_INNER_CAP]:
                lift_barrier_over_odd_component(g, b, y, bp.members)
                report.lift_scenarios += 1
    for s in find_2separations(g)[:_LIFT_2SEP_CAP]:
        for d in two_separation_cuts(g, s):
            for kept in d.shores():
                inner = g.contract(g.vertex_set - kept, g.fresh_vertex())
                for bp in enumerate_barriers(inner)[:_LIFT_2SEP_INNER_CAP]:
                    lift_barrier_over_2sep(g, s, d, bp.members)
                    report.lift_scenarios += 1


def _strict_barrier_setups(label: str, g: Graph, cuts, report: SweepReport
                           ) -> None:
    budget = _STRICT_SETUP_CAP
    for c in cuts:
        if budget <= 0:
            return
        shore_cutvs = g.induced(c.shore).cut_vertices()
        other_cutvs = g.induced(c.other_shore).cut_vertices()
        for eid in sorted(c.edge_ids):
            if budget <= 0:
                return
            u, v = g.edge_ends(eid)
            if u in c.other_shore:
                u, v = v, u
            if u in shore_cutvs or v in other_cutvs:
                continue
            inner = g.without_vertices((u, v))
            x = c.shore - {u}
            setup_label = f"{label}:dead{sorted(x)}"
            for strategy in ("constructive", "exhaustive"):
                found = find_strict_barrier(inner, x, strategy=strategy)
                checked = is_barrier(inner, found.witness.barrier.members)
                if checked is None:
                    _flag(report, "strict_barrier", setup_label,
                          f"{strategy} result is not a barrier")
                    continue
                if found.shore not in (x, inner.vertex_set - x):
                    _flag(report, "strict_barrier", setup_label,
                          f"{strategy} result names a non-shore")
                if any(not part <= found.shore for part in checked.odd_parts):
                    _flag(report, "strict_barrier", setup_label,
                          f"{strategy} result is not confined to its shore")
                if is_strict_barrier(inner, checked) is None:
                    _flag(report, "strict_barrier", setup_label,
                          f"{strategy} result is not strict")
            report.strict_barrier_instances += 1
            budget -= 1


def _check_graph(label: str, g: Graph, report: SweepReport,
                 tally: BranchTally, required_shore=None) -> None:
    report.instances += 1
    if not is_matching_covered(g):
        _flag(report, "matching_covered", label,
              "corpus graph is not matching covered")
        return
    if g.n >= 4 and not g.is_2connected():
        _flag(report, "connectivity", label,
              "matching covered graph on 4+ vertices must be 2-connected")
        return
    all_cuts = enumerate_tight_cuts(g)
    report.tight_cuts_checked += len(all_cuts)
    nontrivial = [c for c in all_cuts if not c.is_trivial]
    if nontrivial:
        report.graphs_with_nontrivial_tight_cut += 1
    report.nontrivial_tight_cuts += len(nontrivial)
    if required_shore is not None:
        wanted = g.boundary(required_shore)
        if wanted not in nontrivial:
            _flag(report, "fixture", label,
                  f"pinned shore {sorted(required_shore)} is not a "
                  "nontrivial tight cut")
    for c in nontrivial:
        _check_cut(label, g, c, all_cuts, report, tally)
    try:
        _check_barriers(label, g, report)
    except Exception as exc:
        _flag(report, "barrier", label, repr(exc))
    try:
        _check_twoseps(label, g, report)
    except Exception as exc:
        _flag(report, "twosep", label, repr(exc))
    try:
        _lift_scenarios(label, g, report)
    except Exception as exc:
        _flag(report, "lift", label, repr(exc))
    try:
        _strict_barrier_setups(label, g, nontrivial, report)
    except Exception as exc:
        _flag(report, "strict_barrier", label, repr(exc))


def run_sweep(specs: Sequence[CorpusSpec], *, include_fixtures: bool = True,
              command: str = "sweep",
              tally: BranchTally | None = None) -> SweepReport:
    """Run the full check battery over the corpora the specs describe."""
    report = SweepReport(command=command)
    if tally is None:
        tally = BranchTally()
    start = time.perf_counter()
    for spec in specs:
        if spec.mode == "named":
            for name in spec.names:
                _check_graph(f"named-{name.lower()}", canonical(name),
                             report, tally)
            continue
        for idx, g in enumerate(enumerate_corpus(spec), 1):
            if spec.mode == "exhaustive":
                label = f"exhaustive-n{spec.n}-#{idx}"
            else:
                label = f"random-n{spec.n}-s{spec.seed}-#{idx}"
            _check_graph(label, g, report, tally)
    if include_fixtures:
        for name, g, shore in fixture_instances():
            _check_graph(f"fixture-{name}", g, report, tally,
                         required_shore=shore)
    report.branch_counts = dict(sorted(tally.counts.items()))
    report.elapsed = time.perf_counter() - start
    return report
