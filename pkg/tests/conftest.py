"""Shared fixtures and independent brute-force oracles.

The oracles work on plain (vertices, edges) data and never call into
the package, so they can vouch for it. Edge ids are list positions,
matching what Graph(range(n), edges) assigns.
"""

from __future__ import annotations

from itertools import combinations

import pytest

from tightcut.graph import Graph

# acceptance criteria register: test_acceptance records one verdict per
# criterion here; the summary hook prints them after the test run
CRITERIA: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, detail = CRITERIA[n]
        line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)


# brute-force oracles -----------------------------------------------------

def brute_max_matching(vertices, edges) -> int:
    """Maximum matching size by exhaustive recursion."""
    verts = sorted(vertices)
    incident = {v: [] for v in verts}
    for eid, (u, v) in enumerate(edges):
        incident[u].append((eid, v))
        incident[v].append((eid, u))

    def rec(free: frozenset[int]) -> int:
        for v in verts:
            if v in free:
                break
        else:
            return 0
        best = rec(free - {v})
        for _, w in incident[v]:
            if w in free and w != v:
                best = max(best, 1 + rec(free - {v, w}))
        return best

    return rec(frozenset(verts))


def brute_perfect_matchings(vertices, edges) -> set[frozenset[int]]:
    """All perfect matchings as frozensets of edge positions."""
    verts = sorted(vertices)
    if len(verts) % 2:
        return set()
    incident = {v: [] for v in verts}
    for eid, (u, v) in enumerate(edges):
        incident[u].append((eid, v))
        incident[v].append((eid, u))
    out: set[frozenset[int]] = set()

    def rec(free: frozenset[int], used: frozenset[int]) -> None:
        if not free:
            out.add(used)
            return
        v = min(free)
        for eid, w in incident[v]:
            if w in free and w != v:
                rec(free - {v, w}, used | {eid})

    rec(frozenset(verts), frozenset())
    return out


def brute_is_tight(vertices, edges, shore) -> bool:
    """Every perfect matching crosses the shore exactly once."""
    shore = frozenset(shore)
    pms = brute_perfect_matchings(vertices, edges)
    if not pms:
        raise ValueError("no perfect matchings")
    cut = {
        eid for eid, (u, v) in enumerate(edges)
        if (u in shore) != (v in shore)}
    return all(len(pm & cut) == 1 for pm in pms)


def brute_components(vertices, edges, removed=frozenset()):
    removed = frozenset(removed)
    live = set(vertices) - removed
    adj = {v: set() for v in live}
    for u, v in edges:
        if u in live and v in live:
            adj[u].add(v)
            adj[v].add(u)
    seen: set[int] = set()
    comps = []
    for start in sorted(live):
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(adj[v] - comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def brute_is_barrier(vertices, edges, members) -> bool:
    members = frozenset(members)
    odd = sum(
        1 for comp in brute_components(vertices, edges, members)
        if len(comp) % 2)
    return odd == len(members)


def brute_is_matching_covered(vertices, edges) -> bool:
    verts = set(vertices)
    if len(verts) < 2 or not edges:
        return False
    if len(brute_components(vertices, edges)) != 1:
        return False
    pms = brute_perfect_matchings(vertices, edges)
    if not pms:
        return False
    covered = set()
    for pm in pms:
        covered |= pm
    return covered == set(range(len(edges)))


def brute_is_critical(vertices, edges) -> bool:
    verts = sorted(vertices)
    if not verts or len(verts) % 2 == 0:
        return False
    for v in verts:
        rest = [e for e in edges if v not in e]
        kept = [u for u in verts if u != v]
        if brute_max_matching(kept, rest) * 2 != len(kept):
            return False
    return True


# shared graphs ------------------------------------------------------------

def cycle(n: int) -> Graph:
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture
def c6() -> Graph:
    return cycle(6)


@pytest.fixture
def k4() -> Graph:
    return Graph(range(4), list(combinations(range(4), 2)))
