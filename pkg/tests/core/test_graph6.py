import networkx as nx
import pytest

from extremal.core.exceptions import Graph6ParseError
from extremal.core.graph6 import (
    from_networkx,
    parse_graph6,
    read_graph6_bytes,
    read_graph6_lines,
    write_graph6,
    write_graph6_lines,
)
from extremal.core.graphs import graph_from_edges
from extremal.types import Graph
from extremal.types.graph import pair_count


def test_parse_known_graphs(k4, path4):
    assert parse_graph6("C~") == k4
    assert parse_graph6(">>graph6<<C~") == k4
    assert parse_graph6(write_graph6(path4)) == path4


def test_write_matches_networkx(petersen):
    expected = nx.to_graph6_bytes(nx.petersen_graph(), header=False).decode().strip()
    assert write_graph6(petersen) == expected
    assert parse_graph6(expected) == petersen


def test_largest_order_uses_long_prefix():
    g = graph_from_edges(64, [(i, (i + 1) % 64) for i in range(64)])
    encoded = write_graph6(g)
    assert encoded.startswith("~")
    assert parse_graph6(encoded) == g


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("C", 1),  # four vertices need one data byte
        ("C~~", 2),
        ("C!", 1),
        ("Cé", 1),
        ("~?@@", 0),  # 65 vertices
    ],
)
def test_malformed_input_reports_offset(text, offset):
    with pytest.raises(Graph6ParseError) as error:
        parse_graph6(text)
    assert error.value.offset == offset


def test_read_lines():
    graphs = read_graph6_lines(">>graph6<<C~\n\nA_\n")
    assert [g.edge_count for g in graphs] == [6, 1]
    assert read_graph6_lines(write_graph6_lines(graphs)) == graphs


def test_read_lines_offsets_count_from_start_of_text():
    with pytest.raises(Graph6ParseError) as error:
        read_graph6_lines("C~\nC!\n")
    assert error.value.offset == 4


def test_from_networkx_keeps_isolated_vertices():
    graph = nx.empty_graph(5)
    graph.add_edge(0, 4)
    assert from_networkx(graph) == graph_from_edges(5, [(0, 4)])
    assert write_graph6(Graph.empty(1)) == "@"


def test_truncated_long_prefix_offset_counts_from_start_of_text():
    with pytest.raises(Graph6ParseError) as error:
        read_graph6_lines("C~\n~\n")
    assert error.value.offset == 4


def test_read_bytes_reports_offsets_of_invalid_bytes():
    assert [g.n for g in read_graph6_bytes(b"C~\r\n\nD??")] == [4, 5]
    assert read_graph6_bytes(b"\n \n") == []
    with pytest.raises(Graph6ParseError) as error:
        read_graph6_bytes(b"C~\n\xff\xfe\n")
    assert error.value.offset == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_on_every_small_graph(n):
    for mask in range(1 << pair_count(n)):
        g = Graph.from_mask(n, mask)
        assert parse_graph6(write_graph6(g)) == g


def test_round_trip_on_random_graphs():
    graphs = [
        from_networkx(nx.gnp_random_graph(1 + seed % 20, 0.5, seed=seed)) for seed in range(200)
    ]
    assert read_graph6_lines(write_graph6_lines(graphs)) == graphs
