"""Barriers, two-separations, and barrier transport across contractions.

A barrier of a graph is a vertex set with exactly as many odd
components outside it as it has members. A strict barrier additionally
has every odd component critical or a single vertex, and a matching
covered core (the bipartite graph obtained by collapsing each odd
component to one vertex and dropping everything else).

Strict barriers confined to one shore are what explains a dead cut: a
cut none of whose edges lies in any perfect matching. find_strict_barrier
locates one, tagged with the shore that contains it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

from .graph import (
    Cut,
    EnumerationLimitError,
    Graph,
    GraphError,
    InternalInvariantError,
    odd_even_split,
)
from .matching import (
    is_admissible,
    is_critical,
    is_matchable,
    is_matching_covered,
    matching_structure,
)


@dataclass(frozen=True)
class Barrier:
    """A vertex set with one odd component outside it per member."""

    members: frozenset[int]
    odd_parts: tuple[frozenset[int], ...]
    graph: Graph = field(compare=False, repr=False)

    @property
    def is_nontrivial(self) -> bool:
        return len(self.members) >= 2

    def __repr__(self):
        parts = [sorted(p) for p in self.odd_parts]
        return f"Barrier({sorted(self.members)}, odd_parts={parts})"


def is_barrier(g: Graph, members) -> Barrier | None:
    """The Barrier on these members, or None if o(g - members) differs.

    Purely a component count; matchability of g is not required. The
    empty set and the full vertex set are rejected as malformed rather
    than returning None.
    """
    members = frozenset(members)
    if not members:
        raise GraphError("barrier candidate is empty")
    if not members <= g.vertex_set:
        raise GraphError(
            f"not vertices of the graph: {sorted(members - g.vertex_set)}")
    if members == g.vertex_set:
        raise GraphError("barrier candidate is the whole vertex set")
    odd, _ = odd_even_split(g.components_without(members))
    if len(odd) != len(members):
        return None
    return Barrier(members, odd, g)


def enumerate_barriers(g: Graph, *, within=None, nontrivial_only=False,
                       max_vertices=16) -> list[Barrier]:
    """All barriers drawn from a candidate pool, by size then lex order.

    Desk-scale only: refuses pools larger than max_vertices. Results
    are cached per pool on the graph.
    """
    if within is None:
        pool_set = g.vertex_set
    else:
        pool_set = frozenset(within)
        if not pool_set <= g.vertex_set:
            raise GraphError(
                f"not vertices of the graph: {sorted(pool_set - g.vertex_set)}")
    cache = g._cache.setdefault("barriers_by_pool", {})
    got = cache.get(pool_set)
    if got is None:
        if len(pool_set) > max_vertices:
            raise EnumerationLimitError(
                f"barrier enumeration over {len(pool_set)} candidates "
                f"exceeds the guard of {max_vertices}")
        pool = sorted(pool_set)
        found = []
        # a barrier and its odd components are disjoint, so |B| <= n/2
        top = min(len(pool), g.n // 2)
        for size in range(1, top + 1):
            for combo in combinations(pool, size):
                b = is_barrier(g, combo)
                if b is not None:
                    found.append(b)
        got = tuple(found)
        cache[pool_set] = got
    if nontrivial_only:
        return [b for b in got if b.is_nontrivial]
    return list(got)


def barrier_cuts(g: Graph, b: Barrier) -> tuple[Cut, ...]:
    """The boundary of each odd component, in component order."""
    if b.graph is not g:
        raise GraphError("barrier belongs to a different graph")
    return tuple(g.boundary(part) for part in b.odd_parts)


@dataclass(frozen=True)
class TwoSeparation:
    """Two even-order sides meeting exactly in a separating vertex pair."""

    pair: tuple[int, int]
    side1: frozenset[int]
    side2: frozenset[int]
    graph: Graph = field(compare=False, repr=False)

    def __repr__(self):
        return (f"TwoSeparation(pair={self.pair}, "
                f"side1={sorted(self.side1)}, side2={sorted(self.side2)})")


def make_two_separation(g: Graph, pair, side1, side2) -> TwoSeparation:
    """Validate and canonicalize; the lex-smaller side becomes side1."""
    pair_set = frozenset(pair)
    if len(pair_set) != 2 or not pair_set <= g.vertex_set:
        raise GraphError(f"not a vertex pair of the graph: {sorted(pair)}")
    s1, s2 = frozenset(side1), frozenset(side2)
    if not (s1 <= g.vertex_set and s2 <= g.vertex_set):
        raise GraphError("sides contain vertices outside the graph")
    if s1 | s2 != g.vertex_set:
        raise GraphError("sides do not cover the vertex set")
    if s1 & s2 != pair_set:
        raise GraphError("sides must meet exactly in the separating pair")
    if len(s1) % 2 or len(s2) % 2:
        raise GraphError("both sides must have even order")
    if not s1 - pair_set or not s2 - pair_set:
        raise GraphError("both sides need a vertex besides the pair")
    far2 = s2 - pair_set
    for v in sorted(s1 - pair_set):
        for w in g.neighbors(v):
            if w in far2:
                raise GraphError(f"edge {v}-{w} crosses the separation")
    if sorted(s2) < sorted(s1):
        s1, s2 = s2, s1
    u, v = sorted(pair_set)
    return TwoSeparation((u, v), s1, s2, g)


def find_2separations(g: Graph) -> list[TwoSeparation]:
    """All two-separations, sorted by (pair, side1).

    Every grouping of the components of g - {u, v} into two even sides
    counts, with the component holding the smallest vertex fixed on
    side one so each unordered split appears once.
    """
    out = []
    for u, v in combinations(g.vertices, 2):
        parts = g.components_without(frozenset((u, v)))
        if len(parts) < 2:
            continue
        head, rest = parts[0], parts[1:]
        for bits in range(1 << len(rest)):
            group1 = set(head)
            group2: set[int] = set()
            for i, comp in enumerate(rest):
                (group1 if bits >> i & 1 else group2).update(comp)
            if not group2 or len(group1) % 2 or len(group2) % 2:
                continue
            try:
                out.append(make_two_separation(
                    g, (u, v), frozenset(group1 | {u, v}),
                    frozenset(group2 | {u, v})))
            except GraphError as exc:
                raise InternalInvariantError(
                    f"component grouping failed validation: {exc}") from exc
    out.sort(key=lambda s: (s.pair, sorted(s.side1)))
    return out


def two_separation_cuts(g: Graph, s: TwoSeparation) -> tuple[Cut, Cut]:
    """The two cuts a two-separation generates.

    With pair (u, v) sorted, these are the boundaries of side1 - u and
    side1 - v; the same cuts seen from side2 in the other order.
    """
    if s.graph is not g:
        raise GraphError("two-separation belongs to a different graph")
    u, v = s.pair
    return g.boundary(s.side1 - {u}), g.boundary(s.side1 - {v})


def barrier_core(g: Graph, b: Barrier) -> Graph:
    """Collapse each odd component of g - B onto a fresh vertex.

    Keeps exactly the edges between B and the odd components, ids
    preserved, parallels retained; edges inside B, inside components,
    and everything touching even components disappear. Fresh vertices
    are numbered consecutively from g.fresh_vertex() in component
    order and carry the merged provenance of their component.
    """
    if b.graph is not g:
        raise GraphError("barrier belongs to a different graph")
    start = g.fresh_vertex()
    label: dict[int, int] = {}
    provenance: dict[int, frozenset[int]] = {}
    for i, part in enumerate(b.odd_parts):
        fresh = start + i
        merged: set[int] = set()
        for x in sorted(part):
            merged.update(g.provenance_of(x))
            label[x] = fresh
        provenance[fresh] = frozenset(merged)
    for v in b.members:
        provenance[v] = g.provenance_of(v)
    vertices = sorted(b.members) + [start + i for i in range(len(b.odd_parts))]
    edges: dict[int, tuple[int, int]] = {}
    for eid, (x, y) in g.edge_items():
        if x in b.members and y in label:
            edges[eid] = (x, label[y])
        elif y in b.members and x in label:
            edges[eid] = (label[x], y)
    return Graph(vertices, edges, provenance=provenance)


class StrictBarrier(NamedTuple):
    """A barrier whose odd parts are trivial or critical, with mc core."""

    barrier: Barrier
    core: Graph


def is_strict_barrier(g: Graph, b: Barrier) -> StrictBarrier | None:
    """The StrictBarrier witness, or None.

    Strict means every odd component is a single vertex or critical,
    and the barrier core is matching covered.
    """
    if b.graph is not g:
        raise GraphError("barrier belongs to a different graph")
    for part in b.odd_parts:
        if len(part) > 1 and not is_critical(g.induced(part)):
            return None
    c = barrier_core(g, b)
    if not is_matching_covered(c):
        return None
    return StrictBarrier(b, c)


class ShoreBarrier(NamedTuple):
    """A strict barrier confined, odd parts included, to one cut shore."""

    witness: StrictBarrier
    shore: frozenset[int]


def _attachments(g: Graph, shore: frozenset[int]) -> list[int]:
    return sorted(
        v for v in shore if any(w not in shore for w in g.neighbors(v)))


def _confined(g: Graph, members, shore: frozenset[int]) -> StrictBarrier | None:
    """Verify a candidate: barrier of g, parts inside shore, strict."""
    members = frozenset(members)
    if not members or not members <= shore:
        return None
    b = is_barrier(g, members)
    if b is None:
        return None
    if any(not part <= shore for part in b.odd_parts):
        return None
    return is_strict_barrier(g, b)


def _constructive_candidates(g: Graph, shore: frozenset[int]):
    """Candidate barriers confined to one shore, most promising first.

    All candidates get verified by the caller, so this only has to be
    generous, not sound. Sources, in order: single-vertex deletions of
    the shore subgraph (attachment seeds first), pair deletions that
    break matchability, shore projections of near-barriers around each
    cut edge, and greedily grown maximal barriers of the shore subgraph.
    """
    h = g.induced(shore)
    attach = _attachments(g, shore)
    seeds = attach + [v for v in sorted(shore) if v not in set(attach)]

    for a in seeds:
        ms = matching_structure(h, frozenset((a,)))
        yield ms.attachments | {a}

    for a, b in combinations(sorted(shore), 2):
        if is_matchable(h, frozenset((a, b))):
            continue
        ms = matching_structure(h, frozenset((a, b)))
        yield ms.attachments | {a, b}

    for eid in sorted(g.boundary(shore).edge_ids):
        u, v = g.edge_ends(eid)
        ms = matching_structure(g, frozenset((u, v)))
        yield (ms.attachments | {u, v}) & shore

    for a in seeds:
        grown = {a}
        for b in sorted(shore):
            if b in grown or len(grown) + 1 == len(shore):
                continue
            if is_barrier(h, frozenset(grown | {b})) is not None:
                grown.add(b)
        yield frozenset(grown)


def _find_confined_constructive(g, shore) -> StrictBarrier | None:
    seen: set[frozenset[int]] = set()
    for candidate in _constructive_candidates(g, shore):
        candidate = frozenset(candidate)
        if not candidate or candidate in seen:
            continue
        seen.add(candidate)
        hit = _confined(g, candidate, shore)
        if hit is not None:
            return hit
    return None


def _find_confined_exhaustive(g, shore) -> StrictBarrier | None:
    if len(shore) > 18:
        raise EnumerationLimitError(
            f"exhaustive barrier search over a {len(shore)}-vertex shore")
    pool = sorted(shore)
    # the barrier and its odd parts both fit inside the shore
    for size in range(1, len(pool) // 2 + 1):
        for combo in combinations(pool, size):
            hit = _confined(g, combo, shore)
            if hit is not None:
                return hit
    return None


def find_strict_barrier(g: Graph, x, *, strategy="auto") -> ShoreBarrier:
    """A strict barrier confined to one shore of the dead cut at x.

    Preconditions: g matchable, both shore subgraphs connected, and no
    boundary edge of x admissible. Such a barrier always exists; not
    finding one means the implementation is wrong, hence the internal
    error at the bottom.

    strategy: "constructive" tries verified candidates grown from
    matching structure; "exhaustive" scans shore subsets by size then
    lex order; "auto" tries constructive first, then exhaustive.
    """
    if strategy not in ("auto", "constructive", "exhaustive"):
        raise GraphError(f"unknown strategy: {strategy!r}")
    x = frozenset(x)
    if not x <= g.vertex_set:
        raise GraphError(f"not vertices of the graph: {sorted(x - g.vertex_set)}")
    if not x or x == g.vertex_set:
        raise GraphError("shore must be a nonempty proper subset")
    xbar = g.vertex_set - x
    if not is_matchable(g):
        raise GraphError("graph is not matchable")
    if not g.induced(x).is_connected() or not g.induced(xbar).is_connected():
        raise GraphError("both shore subgraphs must be connected")
    for eid in sorted(g.boundary(x).edge_ids):
        if is_admissible(g, eid):
            raise GraphError(f"cut edge {eid} is admissible; the cut is not dead")
    # a dead cut in a matchable graph has even shores
    assert len(x) % 2 == 0

    shores = (x, xbar)
    if strategy in ("auto", "constructive"):
        for shore in shores:
            hit = _find_confined_constructive(g, shore)
            if hit is not None:
                return ShoreBarrier(hit, shore)
        if strategy == "constructive":
            raise InternalInvariantError(
                "constructive candidates missed every confined strict barrier")
    for shore in shores:
        hit = _find_confined_exhaustive(g, shore)
        if hit is not None:
            return ShoreBarrier(hit, shore)
    raise InternalInvariantError(
        "no confined strict barrier exists for a dead cut; "
        "this contradicts the structure theory")


def lift_barrier_over_odd_component(g: Graph, b: Barrier, y, b_prime) -> Barrier:
    """Transport a barrier of g/(complement of y) back to g.

    y must be an odd component of g - B for a nontrivial barrier B of
    the matching covered graph g. The contraction collapses everything
    outside y onto the fresh vertex label. If the inner barrier uses
    that label, the label is replaced by all of B; otherwise the inner
    barrier is already a barrier of g.
    """
    if b.graph is not g:
        raise GraphError("barrier belongs to a different graph")
    if not is_matching_covered(g):
        raise GraphError("graph is not matching covered")
    if not b.is_nontrivial:
        raise GraphError("barrier must be nontrivial")
    y = frozenset(y)
    if y not in b.odd_parts:
        raise GraphError("y is not an odd component of g - B")
    ybar_label = g.fresh_vertex()
    inner = g.contract(g.vertex_set - y, ybar_label)
    b_prime = frozenset(b_prime)
    if not b_prime <= inner.vertex_set:
        raise GraphError("inner barrier has vertices outside the contraction")
    checked = is_barrier(inner, b_prime)
    if checked is None:
        raise GraphError("not a barrier of the contraction")
    if ybar_label in b_prime:
        lifted = b.members | (b_prime - {ybar_label})
    else:
        lifted = b_prime
    result = is_barrier(g, lifted)
    if result is None:
        raise InternalInvariantError(
            f"lift of {sorted(b_prime)} over component {sorted(y)} "
            f"is not a barrier of the host")
    if ybar_label in b_prime:
        # inner components survive the lift verbatim
        host_parts = set(g.components_without(lifted))
        for part in inner.components_without(b_prime):
            if part not in host_parts:
                raise InternalInvariantError(
                    f"component {sorted(part)} not preserved by the lift")
    return result


def lift_barrier_over_2sep(g: Graph, s: TwoSeparation, d: Cut, b) -> Barrier:
    """Transport a barrier over the contraction of a two-separation cut.

    d must be one of the cuts the two-separation generates. Each shore
    of d gives one contraction of g; the first contraction (d.shore
    first) in which b is a barrier fixes the direction. If b uses the
    fresh label, the label is replaced by the pair member on the
    contracted side; otherwise b lifts unchanged.
    """
    if s.graph is not g:
        raise GraphError("two-separation belongs to a different graph")
    if not is_matching_covered(g):
        raise GraphError("graph is not matching covered")
    if d not in two_separation_cuts(g, s):
        raise GraphError("cut does not arise from the two-separation")
    b = frozenset(b)
    ybar_label = g.fresh_vertex()
    for kept in (d.shore, d.other_shore):
        inner = g.contract(g.vertex_set - kept, ybar_label)
        if not b <= inner.vertex_set:
            continue
        if is_barrier(inner, b) is None:
            continue
        replacement = next(p for p in s.pair if p not in kept)
        lifted = (b - {ybar_label}) | {replacement} if ybar_label in b else b
        result = is_barrier(g, lifted)
        if result is None:
            raise InternalInvariantError(
                f"lift of {sorted(b)} across the two-separation "
                f"{s.pair} is not a barrier of the host")
        return result
    raise GraphError("not a barrier of either contraction of the cut")
