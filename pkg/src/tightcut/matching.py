"""Perfect matchings and the predicates built on them.

The polynomial-time core is a blossom-contraction maximum matching
search. Everything else (admissibility, matching covered, critical,
bicritical, the exposed/attachment split) reduces to matchability
queries on vertex-deleted subgraphs, memoized per graph and keyed by
the removed vertex set, so admissibility of parallel edges is computed
once per endpoint pair.

Exhaustive perfect-matching enumeration exists as a bounded oracle for
tightness checks. It refuses to run on graphs above the enumeration
limit instead of silently truncating; the limit can be overridden via
the TIGHTCUT_MAX_ENUM environment variable or a ``limit=`` argument.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations

from .graph import EnumerationLimitError, Graph, GraphError

DEFAULT_ENUMERATION_LIMIT = 24
ENUMERATION_LIMIT_ENV = "TIGHTCUT_MAX_ENUM"


def enumeration_limit() -> int:
    """Current vertex-count cap for perfect-matching enumeration."""
    raw = os.environ.get(ENUMERATION_LIMIT_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise GraphError(
            f"{ENUMERATION_LIMIT_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise GraphError(
            f"{ENUMERATION_LIMIT_ENV} must be nonnegative, got {value}")
    return value


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges of a host graph."""

    edges: frozenset[int]
    graph: Graph = field(compare=False, repr=False)

    def __post_init__(self):
        seen: set[int] = set()
        for eid in self.edges:
            u, v = self.graph.edge_ends(eid)
            if u in seen or v in seen:
                raise GraphError(f"edges share a vertex: {sorted(self.edges)}")
            seen.add(u)
            seen.add(v)

    @property
    def covered(self) -> frozenset[int]:
        out: set[int] = set()
        for eid in self.edges:
            out.update(self.graph.edge_ends(eid))
        return frozenset(out)

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.edges) == self.graph.n

    def __repr__(self):
        return f"Matching({sorted(self.edges)})"


def _blossom_mates(g: Graph, removed: frozenset) -> dict[int, int]:
    """Maximum matching of g - removed as a symmetric mate map.

    Blossom contraction over a breadth-first alternating forest, O(V^3).
    Vertices, adjacency rows, and search order are all sorted, so the
    result is deterministic.
    """
    verts = [v for v in g.vertices if v not in removed]
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj: list[list[int]] = [[] for _ in range(n)]
    seen_pairs: set[tuple[int, int]] = set()
    for _, (u, v) in g.edge_items():
        if u in removed or v in removed or (u, v) in seen_pairs:
            continue
        seen_pairs.add((u, v))
        adj[index[u]].append(index[v])
        adj[index[v]].append(index[u])
    for row in adj:
        row.sort()

    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v] = w
                    match[w] = v
                    break

    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used = [False] * n
        x = a
        while True:
            x = base[x]
            used[x] = True
            if match[x] == -1:
                break
            x = p[match[x]]
        y = b
        while True:
            y = base[y]
            if used[y]:
                return y
            y = p[match[y]]

    def mark_path(v: int, b: int, child: int, in_blossom: list) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> bool:
        for i in range(n):
            p[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, curbase, to, in_blossom)
                    mark_path(to, curbase, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        cur = to
                        while cur != -1:
                            prev = p[cur]
                            nxt = match[prev]
                            match[cur] = prev
                            match[prev] = cur
                            cur = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return {verts[i]: verts[match[i]] for i in range(n) if match[i] != -1}


def _nu_cache(g: Graph) -> dict:
    got = g._cache.get("nu_by_removed")
    if got is None:
        got = {}
        g._cache["nu_by_removed"] = got
    return got


def _validate_removed(g: Graph, removed: frozenset) -> None:
    bad = removed - g.vertex_set
    if bad:
        raise GraphError(f"not vertices of the graph: {sorted(bad)}")


def matching_number(g: Graph, removed=frozenset()) -> int:
    """Size of a maximum matching of g - removed."""
    removed = frozenset(removed)
    _validate_removed(g, removed)
    cache = _nu_cache(g)
    got = cache.get(removed)
    if got is None:
        got = len(_blossom_mates(g, removed)) // 2
        cache[removed] = got
    return got


def is_matchable(g: Graph, removed=frozenset()) -> bool:
    """True iff g - removed has a perfect matching.

    The graph on zero vertices counts as matchable (its empty matching
    is perfect); the single vertex does not.
    """
    removed = frozenset(removed)
    _validate_removed(g, removed)
    k = g.n - len(removed)
    if k % 2:
        return False
    if k == 0:
        return True
    return 2 * matching_number(g, removed) == k


def find_perfect_matching(g: Graph) -> Matching | None:
    """A perfect matching, or None. Parallel mates use the least edge id."""
    if g.n % 2:
        return None
    mates = g._cache.get("mates")
    if mates is None:
        mates = _blossom_mates(g, frozenset())
        g._cache["mates"] = mates
    if len(mates) != g.n:
        return None
    eids = frozenset(
        min(g.edges_between(u, v)) for u, v in mates.items() if u < v)
    return Matching(eids, g)


def _resolve_limit(g: Graph, limit) -> None:
    cap = enumeration_limit() if limit is None else limit
    if g.n > cap:
        raise EnumerationLimitError(
            f"refusing to enumerate perfect matchings on {g.n} vertices "
            f"(limit {cap}; raise {ENUMERATION_LIMIT_ENV} or pass limit=)")


def perfect_matching_masks(g: Graph, limit=None) -> tuple[int, ...]:
    """All perfect matchings as edge-id bitmasks, sorted ascending.

    Parallel edges give distinct matchings. Backtracking always extends
    from the smallest uncovered vertex and prunes any branch whose
    remainder is not matchable, so the work stays proportional to the
    number of matchings found.
    """
    got = g._cache.get("pm_masks")
    if got is not None:
        return got
    _resolve_limit(g, limit)
    masks: list[int] = []
    vset = g.vertex_set
    if g.n % 2 == 0:

        def extend(remaining: frozenset, acc: int) -> None:
            if not remaining:
                masks.append(acc)
                return
            if not is_matchable(g, vset - remaining):
                return
            v = min(remaining)
            for w in g.neighbors(v):
                if w not in remaining:
                    continue
                rest = remaining - {v, w}
                for eid in g.edges_between(v, w):
                    extend(rest, acc | (1 << eid))

        extend(vset, 0)
    result = tuple(sorted(masks))
    g._cache["pm_masks"] = result
    return result


def all_perfect_matchings(g: Graph, limit=None) -> list[Matching]:
    out = []
    for mask in perfect_matching_masks(g, limit):
        eids = frozenset(eid for eid in g.edge_ids if mask >> eid & 1)
        out.append(Matching(eids, g))
    return out


def is_admissible(g: Graph, eid: int) -> bool:
    """True iff some perfect matching of g contains the edge."""
    u, v = g.edge_ends(eid)
    return is_matchable(g, frozenset((u, v)))


def is_matching_covered(g: Graph) -> bool:
    """Connected, at least one edge, and every edge in some perfect matching."""
    got = g._cache.get("matching_covered")
    if got is None:
        got = (g.n >= 2 and g.m >= 1 and g.is_connected()
               and is_matchable(g)
               and all(is_admissible(g, eid) for eid in g.edge_ids))
        g._cache["matching_covered"] = got
    return got


def is_critical(g: Graph) -> bool:
    """g - v matchable for every single vertex v.

    Requires at least two vertices, which forces odd order; the single
    vertex is not critical.
    """
    if g.n < 2 or g.n % 2 == 0:
        return False
    return all(is_matchable(g, frozenset((v,))) for v in g.vertices)


def is_bicritical(g: Graph) -> bool:
    """g - u - v matchable for every vertex pair; K2 qualifies."""
    if g.n < 2 or g.n % 2:
        return False
    return all(
        is_matchable(g, frozenset(pair)) for pair in combinations(g.vertices, 2))


@dataclass(frozen=True)
class MatchingStructure:
    """How maximum matchings of g - removed sit on the vertices.

    exposed: vertices avoidable by some maximum matching (deleting one
    keeps the matching number); attachments: their neighbors outside
    the exposed set; rest: everything else; deficiency: number of
    vertices missed by every maximum matching.
    """

    exposed: frozenset[int]
    attachments: frozenset[int]
    rest: frozenset[int]
    deficiency: int


def matching_structure(g: Graph, removed=frozenset()) -> MatchingStructure:
    removed = frozenset(removed)
    _validate_removed(g, removed)
    nu = matching_number(g, removed)
    live = [v for v in g.vertices if v not in removed]
    exposed = {
        v for v in live if matching_number(g, removed | {v}) == nu}
    attachments = {
        w
        for v in exposed for w in g.neighbors(v)
        if w not in removed and w not in exposed}
    rest = frozenset(live) - exposed - attachments
    return MatchingStructure(
        frozenset(exposed), frozenset(attachments), rest, len(live) - 2 * nu)
