import networkx as nx
import pydantic
import pytest

from extremal.core.conditions import satisfies_condition, violating_pairs
from extremal.core.exceptions import InvalidEdgeError, InvalidVertexError, ParameterError
from extremal.core.graph6 import from_networkx, to_networkx
from extremal.core.graphs import (
    complement,
    count_triangles,
    find_triangle,
    graph_from_edges,
    is_connected,
    is_triangle_free,
)
from extremal.types import DegreeSumCondition, Graph
from extremal.types.graph import pair_count


def test_graph_from_edges_rejects_bad_input():
    with pytest.raises(InvalidVertexError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(InvalidEdgeError):
        graph_from_edges(3, [(1, 1)])
    with pytest.raises(ParameterError):
        graph_from_edges(65, [])


def test_graph_model_validates_rows():
    with pytest.raises(pydantic.ValidationError):
        Graph(n=2, adj=(2, 0))  # not symmetric
    with pytest.raises(pydantic.ValidationError):
        Graph(n=2, adj=(1, 0))  # loop at 0
    with pytest.raises(pydantic.ValidationError):
        Graph(n=2, adj=(4, 0))  # neighbor 2 does not exist
    with pytest.raises(pydantic.ValidationError):
        Graph(n=3, adj=(0, 0))


def test_graph_json_round_trip(petersen):
    assert Graph.model_validate_json(petersen.model_dump_json()) == petersen


def test_mask_round_trip_on_all_graphs_of_order_4():
    for mask in range(1 << 6):
        assert Graph.from_mask(4, mask).edge_mask() == mask


def test_degrees_and_edges(path4):
    assert path4.degrees() == (1, 2, 2, 1)
    assert path4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert path4.max_degree == 2
    assert path4.min_degree == 1
    assert path4.has_edge(2, 1)
    assert not path4.has_edge(0, 3)
    assert path4.neighbors(1) == [0, 2]


@pytest.mark.parametrize(
    "graph",
    [
        nx.complete_graph(6),
        nx.petersen_graph(),
        nx.wheel_graph(7),
        nx.gnm_random_graph(12, 30, seed=4),
        nx.gnm_random_graph(20, 90, seed=11),
    ],
)
def test_triangles_and_connectivity_match_networkx(graph):
    g = from_networkx(graph)
    assert count_triangles(g) == sum(nx.triangles(graph).values()) // 3
    assert is_connected(g) == nx.is_connected(graph)
    assert is_triangle_free(g) == (count_triangles(g) == 0)
    assert {frozenset(edge) for edge in to_networkx(g).edges()} == {
        frozenset(edge) for edge in graph.edges()
    }


def test_find_triangle_is_lexicographically_first():
    g = graph_from_edges(5, [(2, 3), (3, 4), (2, 4), (0, 1), (1, 4), (0, 4)])
    assert find_triangle(g) == (0, 1, 4)
    assert find_triangle(from_networkx(nx.petersen_graph())) is None


def test_complement(k4):
    assert complement(k4) == Graph.empty(4)
    assert complement(complement(k4)) == k4


def test_nonadjacent_condition_on_cycle():
    cycle = from_networkx(nx.cycle_graph(5))
    condition = DegreeSumCondition.nonadjacent()
    assert not satisfies_condition(cycle, condition)
    assert violating_pairs(cycle, condition) == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]


def test_adjacent_condition_with_connectivity():
    condition = DegreeSumCondition.adjacent(1)
    triangles = graph_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    # two disjoint triangles: every edge has degree sum 4 < 7
    assert not satisfies_condition(triangles, condition)
    k5_plus_isolated = graph_from_edges(6, from_networkx(nx.complete_graph(5)).edges())
    assert satisfies_condition(
        k5_plus_isolated, DegreeSumCondition(scope="adjacent", offset=1)
    )
    assert not satisfies_condition(k5_plus_isolated, condition)
    assert not satisfies_condition(
        k5_plus_isolated, DegreeSumCondition(scope="adjacent", offset=1, forbid_isolated=True)
    )


def test_offset_below_minus_n_is_rejected(path4):
    with pytest.raises(ParameterError):
        satisfies_condition(path4, DegreeSumCondition(scope="nonadjacent", offset=-5))


def _handshake(g: Graph) -> int:
    return sum((g.adj[u] & g.adj[v]).bit_count() for u, v in g.edges())


@pytest.mark.parametrize("n", range(1, 7))
def test_triangle_handshake_on_every_small_graph(n):
    for mask in range(1 << pair_count(n)):
        g = Graph.from_mask(n, mask)
        assert _handshake(g) == 3 * count_triangles(g)


def test_triangle_handshake_on_random_graphs():
    for seed in range(1000):
        n = 7 + seed % 14
        g = from_networkx(nx.gnp_random_graph(n, 0.1 + (seed % 9) / 10, seed=seed))
        assert _handshake(g) == 3 * count_triangles(g) == sum(nx.triangles(to_networkx(g)).values())
