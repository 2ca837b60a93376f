"""Witness search around a tight cut, and the full decomposition chain.

Every nontrivial tight cut of a matching covered graph admits a
witnessed tight cut (a barrier cut or a two-separation cut) that does
not cross it. find_noncrossing_witness locates one: either some cut
edge is good, meaning both endpoints leave their shores connected when
deleted, and witness_from_edge explains the cut directly; or the
canonical shore splits at a block boundary into a strictly smaller
instance whose answer pulls back.

decompose_tight_cut drives this to completion. It first contracts away
nontrivial barriers confined to a shore (at most one contraction per
side), then repeatedly contracts the off-shore side of the
two-separation cut the witness search finds, until the reference cut
itself is a two-separation cut of the contracted graph. The certificate
records every step for independent replay.

Most intermediate claims here are theorems, not expectations; when one
fails the code raises InternalInvariantError rather than improvising,
because a violation means the implementation, not the input, is wrong.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import DecompositionCertificate, Step
from .cuts import classify_cut, is_tight
from .graph import Cut, Graph, GraphError, InternalInvariantError
from .matching import is_matching_covered
from .structure import (
    Barrier,
    TwoSeparation,
    enumerate_barriers,
    find_strict_barrier,
    is_barrier,
    make_two_separation,
    two_separation_cuts,
)

BRANCH_SOLE_CROSS_NEIGHBORS = "sole_cross_neighbors"
BRANCH_FAR_SHORE_BARRIER = "detached_far_shore_barrier"
BRANCH_EVEN_SIDE_BARRIER = "detached_even_side_barrier"
BRANCH_ODD_SIDE_BARRIER = "detached_odd_side_barrier"
BRANCH_ODD_SIDE_TWOSEP = "detached_odd_side_twosep"
BRANCH_GOOD_EDGE = "good_edge_delegation"
BRANCH_BLOCK_SPLIT = "block_split_recursion"
BRANCH_PULLBACK_BARRIER = "pullback_barrier"
BRANCH_PULLBACK_TWOSEP = "pullback_twosep"
BRANCH_ALREADY_WITNESSED = "already_witnessed"
BRANCH_BARRIER_PHASE = "barrier_cut_phase"
BRANCH_TWOSEP_STEP = "twosep_reduction_step"

# the branches a healthy corpus must exercise
REQUIRED_BRANCHES = frozenset({
    BRANCH_SOLE_CROSS_NEIGHBORS,
    BRANCH_EVEN_SIDE_BARRIER,
    BRANCH_ODD_SIDE_BARRIER,
    BRANCH_ODD_SIDE_TWOSEP,
    BRANCH_PULLBACK_BARRIER,
    BRANCH_PULLBACK_TWOSEP,
    BRANCH_BARRIER_PHASE,
    BRANCH_TWOSEP_STEP,
})


class BranchTally:
    """Counts how often each structural branch fired."""

    def __init__(self):
        self.counts: dict[str, int] = {}

    def hit(self, branch: str) -> None:
        self.counts[branch] = self.counts.get(branch, 0) + 1

    def update(self, other: "BranchTally") -> None:
        for branch, count in other.counts.items():
            self.counts[branch] = self.counts.get(branch, 0) + count

    def missing(self) -> frozenset[str]:
        return REQUIRED_BRANCHES - set(self.counts)

    def __repr__(self):
        inner = ", ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        return f"BranchTally({inner})"


@dataclass(frozen=True)
class WitnessFinding:
    """A witnessed tight cut that does not cross the reference cut.

    kind "barrier": barrier is nontrivial and properly inside the
    reference shore given in shore; cut is the boundary of the odd
    component of g - barrier that holds the entire opposite shore.

    kind "twosep": twosep generates cut, whose off-reference shore lies
    inside one reference shore.
    """

    kind: str
    cut: Cut
    reference: Cut
    barrier: Barrier | None = None
    shore: frozenset[int] | None = None
    twosep: TwoSeparation | None = None


def _require_decomposable(g: Graph, c: Cut) -> None:
    if c.graph is not g:
        raise GraphError("cut belongs to a different graph")
    if not is_matching_covered(g):
        raise GraphError("graph is not matching covered")
    if not is_tight(g, c):
        raise GraphError("cut is not tight")
    if c.is_trivial:
        raise GraphError("cut is trivial")


def _finish_barrier(g: Graph, c: Cut, members, shore: frozenset[int],
                    branch: str) -> WitnessFinding:
    """Re-verify a barrier landed inside one shore and derive its cut."""
    members = frozenset(members)
    b = is_barrier(g, members)
    if b is None:
        raise InternalInvariantError(
            f"{branch}: {sorted(members)} is not a barrier of the host")
    if not b.is_nontrivial:
        raise InternalInvariantError(
            f"{branch}: barrier {sorted(members)} is trivial")
    if not members < shore:
        raise InternalInvariantError(
            f"{branch}: barrier {sorted(members)} not properly inside "
            f"shore {sorted(shore)}")
    opposite = g.vertex_set - shore
    holder = next((p for p in b.odd_parts if opposite <= p), None)
    if holder is None:
        raise InternalInvariantError(
            f"{branch}: no odd component holds the opposite shore")
    derived = g.boundary(holder)
    if derived.is_trivial:
        raise InternalInvariantError(f"{branch}: derived cut is trivial")
    if not is_tight(g, derived):
        raise InternalInvariantError(f"{branch}: derived cut is not tight")
    if derived.crosses(c):
        raise InternalInvariantError(f"{branch}: derived cut crosses the reference")
    return WitnessFinding("barrier", derived, c, barrier=b, shore=shore)


def witness_from_edge(g: Graph, c: Cut, eid: int, tally: BranchTally | None = None,
                      *, prefer_pivot: int | None = None) -> WitnessFinding:
    """Explain the reference cut starting from one good cut edge.

    The edge must be good: removing its endpoint from either shore
    leaves that shore subgraph connected. If each endpoint sees only
    the other across the cut, deleting both leaves a dead cut and the
    confined barrier extends by the endpoint on its side. Otherwise a
    pivot endpoint with two distinct cross neighbors sheds its in-shore
    edges, the residual dead cut yields a confined barrier, and the
    component structure around the pivot decides between three
    outcomes: a barrier on the pivot side, a barrier on the far side,
    or a two-separation.

    prefer_pivot forces the pivot choice; it must be an endpoint of the
    edge with at least two distinct cross neighbors.
    """
    _require_decomposable(g, c)
    if tally is None:
        tally = BranchTally()
    if eid not in c.edge_ids:
        raise GraphError(f"edge {eid} is not in the cut")
    a, b = g.edge_ends(eid)
    u, v = (a, b) if a in c.shore else (b, a)
    xu, xv = c.shore, c.other_shore
    if not g.induced(xu - {u}).is_connected():
        raise GraphError(f"removing endpoint {u} disconnects its shore")
    if not g.induced(xv - {v}).is_connected():
        raise GraphError(f"removing endpoint {v} disconnects its shore")

    u_cross = {w for w in g.neighbors(u) if w in xv}
    v_cross = {w for w in g.neighbors(v) if w in xu}
    if prefer_pivot is not None:
        if prefer_pivot not in (u, v):
            raise GraphError("pivot must be an endpoint of the edge")
        cross = u_cross if prefer_pivot == u else v_cross
        if len(cross) < 2:
            raise GraphError("pivot needs two distinct cross neighbors")
        pivot = prefer_pivot
    elif len(u_cross) >= 2:
        pivot = u
    elif len(v_cross) >= 2:
        pivot = v
    else:
        pivot = None

    if pivot is None:
        # the edge is the sole bridge between its endpoints' horizons
        tally.hit(BRANCH_SOLE_CROSS_NEIGHBORS)
        inner = g.without_vertices((u, v))
        try:
            tagged = find_strict_barrier(inner, xu - {u})
        except GraphError as exc:
            raise InternalInvariantError(
                f"dead-cut search rejected a theorem-backed setup: {exc}") from exc
        if tagged.shore == xu - {u}:
            members = tagged.witness.barrier.members | {u}
            return _finish_barrier(g, c, members, xu, BRANCH_SOLE_CROSS_NEIGHBORS)
        if tagged.shore == xv - {v}:
            members = tagged.witness.barrier.members | {v}
            return _finish_barrier(g, c, members, xv, BRANCH_SOLE_CROSS_NEIGHBORS)
        raise InternalInvariantError("confined barrier tagged with a foreign shore")

    pshore, oshore = (xu, xv) if pivot in xu else (xv, xu)
    in_shore_edges = [
        inc for inc in g.incident(pivot)
        if (set(g.edge_ends(inc)) - {pivot}).pop() in pshore]
    stripped = g.without_edges(in_shore_edges)
    dead_shore = pshore - {pivot}
    try:
        tagged = find_strict_barrier(stripped, dead_shore)
    except GraphError as exc:
        raise InternalInvariantError(
            f"dead-cut search rejected a theorem-backed setup: {exc}") from exc

    if tagged.shore == dead_shore:
        # barrier and components live away from the pivot's horizon
        tally.hit(BRANCH_FAR_SHORE_BARRIER)
        members = tagged.witness.barrier.members | {pivot}
        return _finish_barrier(g, c, members, pshore, BRANCH_FAR_SHORE_BARRIER)
    if tagged.shore != oshore | {pivot}:
        raise InternalInvariantError("confined barrier tagged with a foreign shore")

    confined = tagged.witness.barrier.members
    if pivot in confined:
        raise InternalInvariantError("pivot inside the confined barrier")
    parts = stripped.components_without(confined)
    pivot_part = next(p for p in parts if pivot in p)
    if len(pivot_part) % 2 == 0:
        # the pivot fell into the even component spanning its old shore
        tally.hit(BRANCH_EVEN_SIDE_BARRIER)
        if not dead_shore <= pivot_part:
            raise InternalInvariantError(
                "pivot's even component misses part of its shore")
        landing = pivot_part & oshore
        if not landing:
            raise InternalInvariantError("pivot's even component avoids the far shore")
        members = confined | {min(landing)}
        return _finish_barrier(g, c, members, oshore, BRANCH_EVEN_SIDE_BARRIER)

    if not pivot_part <= oshore | {pivot}:
        raise InternalInvariantError("odd pivot component escapes the tagged shore")
    if len(confined) >= 2:
        tally.hit(BRANCH_ODD_SIDE_BARRIER)
        return _finish_barrier(g, c, confined, oshore, BRANCH_ODD_SIDE_BARRIER)

    # single-member barrier: the pivot and that member separate the graph
    tally.hit(BRANCH_ODD_SIDE_TWOSEP)
    z = min(confined)
    try:
        ts = make_two_separation(
            g, (pivot, z), pivot_part | {z},
            (g.vertex_set - pivot_part) | {pivot})
    except GraphError as exc:
        raise InternalInvariantError(
            f"pivot component does not separate: {exc}") from exc
    derived = g.boundary((pivot_part - {pivot}) | {z})
    if derived.is_trivial:
        raise InternalInvariantError("derived two-separation cut is trivial")
    if not is_tight(g, derived):
        raise InternalInvariantError("derived two-separation cut is not tight")
    if derived.crosses(c):
        raise InternalInvariantError("derived two-separation cut crosses the reference")
    if g.induced(oshore | {pivot}).is_2connected() and derived != c:
        raise InternalInvariantError(
            "two-connected far side must reproduce the reference cut")
    return WitnessFinding("twosep", derived, c, twosep=ts)


def find_noncrossing_witness(g: Graph, c: Cut,
                             tally: BranchTally | None = None) -> WitnessFinding:
    """A witnessed tight cut of g that does not cross the tight cut c.

    Scans cut edges in id order for a good one and delegates to
    witness_from_edge. With no good edge, both shore subgraphs have cut
    vertices; the canonical shore then splits at an attached cut vertex
    into an even block component and the rest, the rest contracts to a
    single vertex, and the strictly smaller instance answers through
    one forced good edge. Its answer pulls back: barriers map through
    the contraction label, and a reproduced cut becomes a
    two-separation of g at the split vertex.
    """
    _require_decomposable(g, c)
    if tally is None:
        tally = BranchTally()
    xu, xv = c.shore, c.other_shore
    near = g.induced(xu)
    far = g.induced(xv)
    if not near.is_connected() or not far.is_connected():
        raise InternalInvariantError("tight cut shore subgraph is disconnected")
    near_cuts = near.cut_vertices()
    far_cuts = far.cut_vertices()

    for eid in sorted(c.edge_ids):
        a, b = g.edge_ends(eid)
        u, v = (a, b) if a in xu else (b, a)
        if u not in near_cuts and v not in far_cuts:
            tally.hit(BRANCH_GOOD_EDGE)
            return witness_from_edge(g, c, eid, tally)

    tally.hit(BRANCH_BLOCK_SPLIT)
    attached = {w for e in c.edge_ids for w in g.edge_ends(e) if w in xu}
    bad = sorted(near_cuts & attached)
    if not bad:
        raise InternalInvariantError(
            "no good edge, yet no attached cut vertex on the canonical shore")
    split = None
    for v in bad:
        for comp in near.components_without(frozenset((v,))):
            if not comp & set(bad):
                split = (v, comp)
                break
        if split:
            break
    if split is None:
        raise InternalInvariantError(
            "every split component touches an attached cut vertex")
    v, f1 = split
    # v is attached across the cut, so every piece it cuts off is even
    for comp in near.components_without(frozenset((v,))):
        if len(comp) % 2:
            raise InternalInvariantError(
                "odd piece beside an attached cut vertex")
    f2 = xu - f1
    if not is_tight(g, g.boundary(f2)):
        raise InternalInvariantError("block split boundary is not tight")

    s_label = g.fresh_vertex()
    shrunk = g.contract(f2, s_label)
    if not is_matching_covered(shrunk):
        raise InternalInvariantError("block split contraction is not matching covered")
    try:
        c2 = shrunk.cut_from_edge_ids(c.edge_ids)
    except GraphError as exc:
        raise InternalInvariantError(
            f"reference cut lost in the block split: {exc}") from exc
    if set(c2.shores()) != {f1 | {s_label}, xv}:
        raise InternalInvariantError("block split moved the reference shores")
    if not shrunk.induced(xv | {s_label}).is_2connected():
        raise InternalInvariantError("far side of the block split is not 2-connected")
    candidates = [
        w for w in shrunk.neighbors(s_label) if w in xv and w not in far_cuts]
    if not candidates:
        raise InternalInvariantError(
            "split vertex has no non-cut neighbor on the far shore")
    w = min(candidates)
    e2 = min(shrunk.edges_between(s_label, w))
    try:
        sub = witness_from_edge(shrunk, c2, e2, tally, prefer_pivot=s_label)
    except GraphError as exc:
        raise InternalInvariantError(
            f"block split instance rejected a theorem-backed edge: {exc}") from exc

    if sub.kind == "barrier":
        tally.hit(BRANCH_PULLBACK_BARRIER)
        members = sub.barrier.members
        if s_label in members:
            lifted = (members - {s_label}) | {v}
            return _finish_barrier(g, c, lifted, xu, BRANCH_PULLBACK_BARRIER)
        if members <= xv:
            return _finish_barrier(g, c, members, xv, BRANCH_PULLBACK_BARRIER)
        if members <= f1:
            return _finish_barrier(g, c, members, xu, BRANCH_PULLBACK_BARRIER)
        raise InternalInvariantError("inner barrier escapes both shores")

    tally.hit(BRANCH_PULLBACK_TWOSEP)
    if sub.cut != c2:
        raise InternalInvariantError(
            "inner two-separation does not reproduce the reference cut")
    z = next(p for p in sub.twosep.pair if p != s_label)
    if z not in xv:
        raise InternalInvariantError("inner separation pair lands off the far shore")
    try:
        ts = make_two_separation(
            g, (v, z), f1 | {v, z}, g.vertex_set - f1)
    except GraphError as exc:
        raise InternalInvariantError(
            f"block split does not separate at the pulled pair: {exc}") from exc
    derived = g.boundary(f1 | {v})
    if derived.is_trivial:
        raise InternalInvariantError("pulled-back two-separation cut is trivial")
    if not is_tight(g, derived):
        raise InternalInvariantError("pulled-back two-separation cut is not tight")
    if derived.crosses(c):
        raise InternalInvariantError("pulled-back two-separation cut crosses the reference")
    return WitnessFinding("twosep", derived, c, twosep=ts)


def _contract_step(g: Graph, c: Cut, tracked, step_cut: Cut, witness,
                   steps: list) -> tuple[Graph, Cut, list]:
    """Record one step, contract, and re-establish every invariant."""
    matches = [
        (zs, side) for zs in step_cut.shores() for side in tracked if zs < side]
    if len(matches) != 1:
        raise InternalInvariantError(
            f"expected exactly one contractible shore, found {len(matches)}")
    contracted, _ = matches[0]
    label = g.fresh_vertex()
    steps.append(Step(g, step_cut, witness, contracted, label))
    new_g = g.contract(contracted, label)
    if not is_matching_covered(new_g):
        raise InternalInvariantError("contraction is not matching covered")
    try:
        new_c = new_g.cut_from_edge_ids(c.edge_ids)
    except GraphError as exc:
        raise InternalInvariantError(f"reference cut corrupted: {exc}") from exc
    if new_c.is_trivial or not is_tight(new_g, new_c):
        raise InternalInvariantError(
            "reference cut lost tightness or became trivial")
    new_tracked = [
        (t - contracted) | {label} if t & contracted else t for t in tracked]
    if set(new_tracked) != set(new_c.shores()):
        raise InternalInvariantError("tracked shores diverged from the reference")
    return new_g, new_c, new_tracked


def decompose_tight_cut(g: Graph, c: Cut,
                        tally: BranchTally | None = None) -> DecompositionCertificate:
    """Contract a nontrivial tight cut down to a witnessed one.

    Already-witnessed cuts return a one-graph certificate. Otherwise
    repeated barrier-cut contractions (off-canonical side first,
    smallest usable odd component preferred) remove every nontrivial
    barrier confined strictly inside a shore; one round per side is
    usually enough, but ties in the odd-component size can force more,
    so the loop runs to a fixpoint. Then each round asks
    find_noncrossing_witness for a two-separation cut, whose shore
    inside a reference shore gets contracted, until the reference cut
    is itself a two-separation cut of the current graph.
    """
    _require_decomposable(g, c)
    if tally is None:
        tally = BranchTally()
    base = classify_cut(g, c)
    if base.witnessed:
        tally.hit(BRANCH_ALREADY_WITNESSED)
        return DecompositionCertificate(g, c, (), g, base)

    steps: list[Step] = []
    cur_g, cur_c = g, c
    tracked = [c.other_shore, c.shore]
    for _ in range(g.n):
        best = None
        for side in tracked:
            opposite = cur_g.vertex_set - side
            for b in enumerate_barriers(cur_g, within=side,
                                        nontrivial_only=True):
                if not b.members < side:
                    continue
                holder = next(
                    (p for p in b.odd_parts if opposite <= p), None)
                if holder is None or holder == opposite:
                    # holder == opposite would contract a whole shore
                    # away; such a barrier witnesses the reference cut
                    # and is caught below if it ever outlives the loop
                    continue
                key = (len(holder), sorted(holder), sorted(b.members))
                if best is None or key < best[0]:
                    best = (key, b, holder)
            if best is not None:
                break
        if best is None:
            break
        _, chosen, holder = best
        step_cut = cur_g.boundary(holder)
        if step_cut.is_trivial or not is_tight(cur_g, step_cut):
            raise InternalInvariantError("barrier cut is trivial or not tight")
        if step_cut.crosses(cur_c):
            raise InternalInvariantError("barrier cut crosses the reference")
        tally.hit(BRANCH_BARRIER_PHASE)
        cur_g, cur_c, tracked = _contract_step(
            cur_g, cur_c, tracked, step_cut, chosen, steps)
    else:
        raise InternalInvariantError("barrier phase loop did not terminate")

    # both shores must now be free of confined nontrivial barriers
    for side in tracked:
        for b in enumerate_barriers(cur_g, within=side, nontrivial_only=True):
            if b.members < side:
                raise InternalInvariantError(
                    f"confined barrier {sorted(b.members)} survived the "
                    f"barrier phases")

    final_cls = None
    for _ in range(cur_g.n + 1):
        cls = classify_cut(cur_g, cur_c)
        if cls.barrier_witnesses:
            raise InternalInvariantError(
                "barrier witness appeared despite clean shores")
        if cls.twosep_witnesses:
            final_cls = cls
            break
        finding = find_noncrossing_witness(cur_g, cur_c, tally)
        if finding.kind != "twosep":
            raise InternalInvariantError(
                "witness search returned a barrier despite clean shores")
        if finding.cut == cur_c:
            raise InternalInvariantError(
                "reference reproduced without a classification witness")
        tally.hit(BRANCH_TWOSEP_STEP)
        cur_g, cur_c, tracked = _contract_step(
            cur_g, cur_c, tracked, finding.cut, finding.twosep, steps)
    if final_cls is None:
        raise InternalInvariantError("reduction did not terminate")
    return DecompositionCertificate(g, c, tuple(steps), cur_g, final_cls)
