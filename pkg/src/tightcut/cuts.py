"""Tight cuts and their structural classification.

A cut is tight when every perfect matching uses exactly one of its
edges. The interesting tight cuts are the witnessed ones: those whose
shore is an odd component of some barrier complement (a barrier cut),
or which arise from a two-separation. classify_cut collects all such
witnesses at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Cut, EnumerationLimitError, Graph, GraphError
from .matching import is_matchable, is_matching_covered, perfect_matching_masks
from .structure import (
    Barrier,
    TwoSeparation,
    enumerate_barriers,
    find_2separations,
    is_barrier,
    two_separation_cuts,
)


def is_tight(g: Graph, c: Cut, *, limit=None) -> bool:
    """True iff every perfect matching meets the cut exactly once."""
    if c.graph is not g:
        raise GraphError("cut belongs to a different graph")
    if not is_matchable(g):
        raise GraphError("tightness is about perfect matchings; none exist")
    cut_mask = 0
    for eid in c.edge_ids:
        cut_mask |= 1 << eid
    return all(
        (mask & cut_mask).bit_count() == 1
        for mask in perfect_matching_masks(g, limit))


def enumerate_tight_cuts(g: Graph, nontrivial_only=False, *,
                         max_vertices=16) -> list[Cut]:
    """Every tight cut once, by shore size then lex order.

    Only shores containing the smallest vertex are generated, which is
    exactly the canonical form, so no deduplication is needed.
    """
    if g.n > max_vertices:
        raise EnumerationLimitError(
            f"tight-cut enumeration on {g.n} vertices exceeds the guard "
            f"of {max_vertices}")
    if not is_matchable(g):
        raise GraphError("tight cuts are about perfect matchings; none exist")
    if g.n < 2:
        return []
    anchor, rest = g.vertices[0], g.vertices[1:]
    out = []
    low = 3 if nontrivial_only else 1
    for size in range(low, g.n - low + 1, 2):
        for combo in combinations(rest, size - 1):
            cut = g.boundary(frozenset((anchor,) + combo))
            if is_tight(g, cut):
                out.append(cut)
    return out


@dataclass(frozen=True)
class CutClassification:
    """Everything classify_cut learned about one cut.

    barrier_witnesses pairs each barrier with the index (into
    cut.shores()) of the shore that appears among the odd components
    of g minus the barrier. twosep_witnesses lists the two-separations
    generating the cut.
    """

    cut: Cut
    tight: bool
    trivial: bool
    barrier_witnesses: tuple[tuple[Barrier, int], ...]
    twosep_witnesses: tuple[TwoSeparation, ...]

    @property
    def witnessed(self) -> bool:
        return self.tight and bool(
            self.barrier_witnesses or self.twosep_witnesses)


def classify_cut(g: Graph, c: Cut, *, max_vertices=16) -> CutClassification:
    """Tightness plus every barrier and two-separation witness.

    Desk scale: barrier candidates per shore are the attachment set of
    the opposite shore followed by full enumeration within the shore,
    so the guard applies to shore sizes.
    """
    if c.graph is not g:
        raise GraphError("cut belongs to a different graph")
    if not is_matching_covered(g):
        raise GraphError("classification needs a matching covered graph")
    tight = is_tight(g, c)
    if not tight:
        return CutClassification(c, False, c.is_trivial, (), ())

    shores = c.shores()
    found: dict[tuple[frozenset[int], int], tuple[Barrier, int]] = {}
    for i, keep in enumerate(shores):
        other = shores[1 - i]
        attach = frozenset(
            w for v in keep for w in g.neighbors(v) if w not in keep)
        candidates = [attach] if attach else []
        candidates.extend(
            b.members
            for b in enumerate_barriers(g, within=other,
                                        max_vertices=max_vertices))
        for members in candidates:
            key = (members, i)
            if key in found:
                continue
            b = is_barrier(g, members)
            if b is None:
                continue
            if keep in g.components_without(members):
                found[key] = (b, i)
    barrier_witnesses = tuple(
        sorted(found.values(), key=lambda t: (sorted(t[0].members), t[1])))

    twosep_witnesses = tuple(
        s for s in find_2separations(g) if c in two_separation_cuts(g, s))

    return CutClassification(
        c, True, c.is_trivial, barrier_witnesses, twosep_witnesses)
