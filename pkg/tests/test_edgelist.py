"""Edge list file format: parse, format, round trips, error reporting."""

import pytest

from tightcut.edgelist import (
    ParseError,
    format_edge_list,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from tightcut.graph import Graph

from conftest import cycle


def test_parse_minimal():
    g = parse_edge_list("p 2 1\ne 0 1\n")
    assert g.vertices == (0, 1)
    assert g.edge_ends(0) == (0, 1)


def test_parse_skips_comments_and_blanks():
    text = "# a comment\n\np 4 2\n# another\ne 0 1\n\ne 2 3\n"
    g = parse_edge_list(text)
    assert g.n == 4
    assert g.m == 2


def test_parse_keeps_parallel_edges():
    g = parse_edge_list("p 2 2\ne 0 1\ne 0 1\n")
    assert g.edges_between(0, 1) == (0, 1)


def test_parse_isolated_vertices_allowed():
    g = parse_edge_list("p 4 1\ne 0 1\n")
    assert g.vertices == (0, 1, 2, 3)


@pytest.mark.parametrize("text", [
    "",                                # no header
    "e 0 1\n",                         # edge before header
    "p 2\n",                           # short header
    "p x y\n",                         # non-integer counts
    "p -1 0\n",                        # negative counts
    "p 2 1\ne 0 1\ne 0 1\n",           # more edges than declared
    "p 2 2\ne 0 1\n",                  # fewer edges than declared
    "p 2 1\nq 0 1\n",                  # bad record tag
    "p 2 1\ne 0\n",                    # short edge line
    "p 2 1\ne 0 x\n",                  # non-integer endpoint
    "p 2 1\ne 0 0\n",                  # loop
    "p 2 1\ne 0 2\n",                  # endpoint out of range
])
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_parse_error_carries_line_number():
    with pytest.raises(ParseError) as err:
        parse_edge_list("p 2 1\ne 0 0\n")
    assert "2" in str(err.value)


def pairs(g):
    return sorted(ends for _, ends in g.edge_items())


def test_format_roundtrip(c6):
    assert pairs(parse_edge_list(format_edge_list(c6))) == pairs(c6)


def test_format_relabels_sparse_vertices():
    g = Graph([3, 8], [(3, 8)])
    text = format_edge_list(g)
    assert "p 2 1" in text
    assert "e 0 1" in text
    assert "# vertex 0 was 3" in text
    h = parse_edge_list(text)
    assert h.vertices == (0, 1)


def test_format_includes_comment(c6):
    text = format_edge_list(c6, comment="hello\nworld")
    assert text.startswith("# hello\n# world\n")
    assert parse_edge_list(text).m == 6


def test_file_roundtrip(tmp_path, c6):
    path = tmp_path / "c6.edges"
    write_edge_list(c6, path, comment="six cycle")
    g = read_edge_list(path)
    assert pairs(g) == pairs(c6)


def test_roundtrip_every_canonical():
    from tightcut.instances import canonical, canonical_names
    for name in canonical_names():
        if name.endswith("(k)"):
            continue
        g = canonical(name)
        h = parse_edge_list(format_edge_list(g))
        assert pairs(h) == pairs(g), name


def test_roundtrip_preserves_multiplicity():
    g = cycle(4).contract({1, 2, 3})
    # sparse labels 0 and 4 with a parallel pair
    h = parse_edge_list(format_edge_list(g))
    assert h.n == 2
    assert h.m == 2
