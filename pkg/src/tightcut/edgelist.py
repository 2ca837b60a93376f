"""Plain-text edge lists.

The format: any number of ``#`` comment lines and blank lines; the first
significant line is a header ``p <n> <m>``; then exactly ``m`` lines
``e <u> <v>`` with 0-based endpoints ``u != v`` below ``n``. Vertices
are 0..n-1 and edge ids are assigned in file order, so parallel edges
are just repeated lines.

The writer emits the same format. Graphs whose vertices are not already
0..n-1 (contractions keep original labels) are relabeled in sorted
order, with the mapping noted in comments.
"""

from __future__ import annotations

from .graph import Graph, GraphError


class ParseError(GraphError):
    """Malformed edge-list text; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_edge_list(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "p":
                raise ParseError(f"expected header 'p <n> <m>', got {line!r}", line_no)
            if len(parts) != 3:
                raise ParseError("header must be 'p <n> <m>'", line_no)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("header counts must be integers", line_no) from None
            if n < 0 or m < 0:
                raise ParseError("header counts must be nonnegative", line_no)
            header = (n, m)
            continue
        n, m = header
        if parts[0] != "e":
            raise ParseError(f"expected edge line 'e <u> <v>', got {line!r}", line_no)
        if len(edges) >= m:
            raise ParseError(f"more than the declared {m} edges", line_no)
        if len(parts) != 3:
            raise ParseError("edge line must be 'e <u> <v>'", line_no)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError("edge endpoints must be integers", line_no) from None
        if u == v:
            raise ParseError(f"loop at vertex {u}", line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(
                f"endpoint out of range: ({u}, {v}) with n={n}", line_no)
        edges.append((u, v))
    if header is None:
        raise ParseError("missing header 'p <n> <m>'", last_line or 1)
    n, m = header
    if len(edges) != m:
        raise ParseError(
            f"declared {m} edges but found {len(edges)}", last_line or 1)
    return Graph(range(n), edges)


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph, *, comment: str | None = None) -> str:
    verts = g.vertices
    relabel = {v: i for i, v in enumerate(verts)}
    lines: list[str] = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}" if part else "#")
    if any(v != i for i, v in enumerate(verts)):
        for v in verts:
            lines.append(f"# vertex {relabel[v]} was {v}")
    lines.append(f"p {g.n} {g.m}")
    pairs = sorted(
        tuple(sorted((relabel[u], relabel[v]))) for _, (u, v) in g.edge_items())
    for u, v in pairs:
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path, *, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g, comment=comment))
