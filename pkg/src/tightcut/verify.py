"""Independent replay of decomposition certificates.

verify_certificate trusts nothing from the certificate body: it walks
the JSON schema first, then recomputes the whole contraction chain from
the host graph, checking each declared graph against the recomputed one
by shape (vertex labels and edge multiset; edge ids are not serialized),
re-validating each witness from first principles, and re-deriving the
final classification. Failures carry a reason code and the JSON path of
the offending field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import DecompositionCertificate
from .cuts import classify_cut, is_tight
from .graph import Cut, Graph, GraphError
from .matching import is_matching_covered
from .structure import (
    find_2separations,
    is_barrier,
    make_two_separation,
    two_separation_cuts,
)

R_SCHEMA = "schema violation"
R_INPUT = "input mismatch"
R_CONTRACTION = "contraction mismatch"
R_NOT_BARRIER = "witness not a barrier"
R_NOT_TWOSEP = "witness not a two-separation"
R_NO_GENERATE = "witness does not generate cut"
R_NOT_TIGHT = "cut not tight"
R_TRIVIAL = "cut trivial"
R_CROSSES = "cut crosses reference"
R_REF = "reference cut corrupted"
R_SHORE = "contracted shore not a cut shore"
R_REMOVES = "contraction removes reference shore"
R_FINAL_2SEP = "final not a two-separation cut"
R_FINAL_WITNESSED = "final not witnessed"
R_STEPS = "step count mismatch"


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failures: tuple[tuple[str, str], ...]

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self):
        if self.ok:
            return "VerificationResult(ok)"
        inner = "; ".join(f"{code} at {path}" for code, path in self.failures)
        return f"VerificationResult(failed: {inner})"


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _is_vertex_list(x) -> bool:
    return isinstance(x, list) and all(_is_int(v) for v in x)


def _check_graph_obj(obj, path, failures) -> bool:
    if not isinstance(obj, dict) or set(obj) != {"n", "edges"}:
        failures.append((R_SCHEMA, path))
        return False
    ok = True
    if not _is_int(obj["n"]) or obj["n"] < 0:
        failures.append((R_SCHEMA, path + ".n"))
        ok = False
    if not isinstance(obj["edges"], list):
        failures.append((R_SCHEMA, path + ".edges"))
        return False
    for i, e in enumerate(obj["edges"]):
        if (not isinstance(e, list) or len(e) != 2
                or not all(_is_int(v) for v in e) or e[0] == e[1]):
            failures.append((R_SCHEMA, f"{path}.edges[{i}]"))
            ok = False
    return ok


def _check_witness_obj(obj, path, failures) -> bool:
    if not isinstance(obj, dict) or "kind" not in obj:
        failures.append((R_SCHEMA, path))
        return False
    kind = obj["kind"]
    if kind == "barrier":
        if set(obj) != {"kind", "members"} or not _is_vertex_list(
                obj.get("members")) or not obj["members"]:
            failures.append((R_SCHEMA, path))
            return False
        return True
    if kind == "twosep":
        if set(obj) != {"kind", "pair", "side1", "side2"}:
            failures.append((R_SCHEMA, path))
            return False
        ok = True
        pair = obj["pair"]
        if not _is_vertex_list(pair) or len(pair) != 2 or pair[0] == pair[1]:
            failures.append((R_SCHEMA, path + ".pair"))
            ok = False
        for name in ("side1", "side2"):
            if not _is_vertex_list(obj[name]) or not obj[name]:
                failures.append((R_SCHEMA, f"{path}.{name}"))
                ok = False
        return ok
    failures.append((R_SCHEMA, path + ".kind"))
    return False


def _check_schema(cert, failures) -> bool:
    if not isinstance(cert, dict) or set(cert) != {
            "input", "steps", "final", "r"}:
        failures.append((R_SCHEMA, "$"))
        return False
    ok = True
    inp = cert["input"]
    if not isinstance(inp, dict) or set(inp) != {"graph", "cut_shore"}:
        failures.append((R_SCHEMA, "$.input"))
        ok = False
    else:
        ok = _check_graph_obj(inp["graph"], "$.input.graph", failures) and ok
        if not _is_vertex_list(inp["cut_shore"]) or not inp["cut_shore"]:
            failures.append((R_SCHEMA, "$.input.cut_shore"))
            ok = False
    steps = cert["steps"]
    if not isinstance(steps, list):
        failures.append((R_SCHEMA, "$.steps"))
        ok = False
    else:
        required = {"graph", "cut_shore", "witness", "contracted_shore",
                    "new_vertex"}
        for i, step in enumerate(steps):
            path = f"$.steps[{i}]"
            if not isinstance(step, dict) or set(step) != required:
                failures.append((R_SCHEMA, path))
                ok = False
                continue
            ok = _check_graph_obj(step["graph"], path + ".graph", failures) and ok
            for name in ("cut_shore", "contracted_shore"):
                if not _is_vertex_list(step[name]) or not step[name]:
                    failures.append((R_SCHEMA, f"{path}.{name}"))
                    ok = False
            ok = _check_witness_obj(
                step["witness"], path + ".witness", failures) and ok
            if not _is_int(step["new_vertex"]):
                failures.append((R_SCHEMA, path + ".new_vertex"))
                ok = False
    final = cert["final"]
    if not isinstance(final, dict) or set(final) != {"graph", "classification"}:
        failures.append((R_SCHEMA, "$.final"))
        ok = False
    else:
        ok = _check_graph_obj(final["graph"], "$.final.graph", failures) and ok
        cls = final["classification"]
        if not isinstance(cls, dict) or not {
                "tight", "trivial", "witnessed", "barriers",
                "two_separations"} <= set(cls):
            failures.append((R_SCHEMA, "$.final.classification"))
            ok = False
        else:
            for name in ("tight", "trivial", "witnessed"):
                if not isinstance(cls[name], bool):
                    failures.append(
                        (R_SCHEMA, f"$.final.classification.{name}"))
                    ok = False
            for name in ("barriers", "two_separations"):
                if not isinstance(cls[name], list):
                    failures.append(
                        (R_SCHEMA, f"$.final.classification.{name}"))
                    ok = False
    if not _is_int(cert["r"]) or cert["r"] < 1:
        failures.append((R_SCHEMA, "$.r"))
        ok = False
    return ok


def _same_shape(g: Graph, obj: dict) -> bool:
    if obj["n"] != g.n:
        return False
    mine = sorted(tuple(sorted(g.edge_ends(eid))) for eid in g.edge_ids)
    theirs = sorted((min(e), max(e)) for e in obj["edges"])
    if mine != theirs:
        return False
    # isolated vertices have no serialized identity, so require none
    return g.vertex_set == {v for pair in mine for v in pair}


def verify_certificate(g: Graph, c: Cut, cert) -> VerificationResult:
    """Replay the chain from (g, c) and check the certificate against it."""
    if isinstance(cert, DecompositionCertificate):
        cert = cert.to_json_dict()
    failures: list[tuple[str, str]] = []
    if not _check_schema(cert, failures):
        return VerificationResult(False, tuple(failures))
    if failures:
        return VerificationResult(False, tuple(failures))

    def fail(code: str, path: str) -> VerificationResult:
        return VerificationResult(False, ((code, path),))

    if c.graph is not g or not is_matching_covered(g):
        return fail(R_INPUT, "$")
    if not is_tight(g, c):
        return fail(R_INPUT, "$")
    if c.is_trivial:
        return fail(R_INPUT, "$")
    if not _same_shape(g, cert["input"]["graph"]):
        return fail(R_INPUT, "$.input.graph")
    declared = frozenset(cert["input"]["cut_shore"])
    if declared not in c.shores():
        return fail(R_INPUT, "$.input.cut_shore")
    if cert["r"] != len(cert["steps"]) + 1:
        return fail(R_STEPS, "$.r")

    cur_g, cur_c = g, c
    for i, step in enumerate(cert["steps"]):
        path = f"$.steps[{i}]"
        if not _same_shape(cur_g, step["graph"]):
            return fail(R_CONTRACTION, path + ".graph")
        shore = frozenset(step["cut_shore"])
        try:
            step_cut = cur_g.boundary(shore)
        except GraphError:
            return fail(R_SCHEMA, path + ".cut_shore")
        if not is_tight(cur_g, step_cut):
            return fail(R_NOT_TIGHT, path + ".cut_shore")
        if step_cut.is_trivial:
            return fail(R_TRIVIAL, path + ".cut_shore")
        if step_cut.crosses(cur_c):
            return fail(R_CROSSES, path + ".cut_shore")

        witness = step["witness"]
        if witness["kind"] == "barrier":
            members = frozenset(witness["members"])
            try:
                b = is_barrier(cur_g, members)
            except GraphError:
                return fail(R_NOT_BARRIER, path + ".witness")
            if b is None:
                return fail(R_NOT_BARRIER, path + ".witness")
            parts = cur_g.components_without(members)
            if step_cut.shore not in parts and step_cut.other_shore not in parts:
                return fail(R_NO_GENERATE, path + ".witness")
        else:
            try:
                ts = make_two_separation(
                    cur_g, tuple(witness["pair"]),
                    frozenset(witness["side1"]), frozenset(witness["side2"]))
            except GraphError:
                return fail(R_NOT_TWOSEP, path + ".witness")
            if step_cut not in two_separation_cuts(cur_g, ts):
                return fail(R_NO_GENERATE, path + ".witness")

        contracted = frozenset(step["contracted_shore"])
        if contracted not in step_cut.shores():
            return fail(R_SHORE, path + ".contracted_shore")
        if not (contracted < cur_c.shore or contracted < cur_c.other_shore):
            return fail(R_REMOVES, path + ".contracted_shore")
        label = step["new_vertex"]
        try:
            cur_g = cur_g.contract(contracted, label)
        except GraphError:
            return fail(R_CONTRACTION, path + ".new_vertex")
        try:
            cur_c = cur_g.cut_from_edge_ids(cur_c.edge_ids)
        except GraphError:
            return fail(R_REF, path)
        if cur_c.is_trivial or not is_tight(cur_g, cur_c):
            return fail(R_REF, path)

    if not _same_shape(cur_g, cert["final"]["graph"]):
        return fail(R_CONTRACTION, "$.final.graph")
    embedded = cert["final"]["classification"]
    if not embedded["witnessed"]:
        # honest certs always end witnessed; a false flag is tampering
        return fail(R_FINAL_WITNESSED, "$.final.classification")
    if cert["r"] == 1:
        cls = classify_cut(cur_g, cur_c)
        if not cls.witnessed:
            return fail(R_FINAL_WITNESSED, "$.final.classification")
    else:
        generated = any(
            cur_c in two_separation_cuts(cur_g, s)
            for s in find_2separations(cur_g))
        if not generated or not embedded["two_separations"]:
            return fail(R_FINAL_2SEP, "$.final.classification")
    return VerificationResult(True, ())
