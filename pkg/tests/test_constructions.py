from collections import Counter

import networkx as nx
import pydantic
import pytest

from extremal.constructions import (
    AdjacentExtremal,
    CompleteBipartite,
    ConstructionId,
    EvenTriangleLight,
    NonAdjacentEdgeExtremal,
    TuranBipartite,
    adjacent_extremal,
    complete_bipartite,
    even_triangle_light,
    nonadjacent_edge_extremal,
    summarize,
    turan_bipartite,
)
from extremal.core.bounds import (
    adjacent_min_edges,
    adjacent_min_triangles,
    even_triangle_light_count,
    nonadjacent_min_edges,
    nonadjacent_min_triangles_odd,
)
from extremal.core.conditions import satisfies_condition
from extremal.core.exceptions import ConstructionAuditError, ParameterError
from extremal.core.graph6 import to_networkx
from extremal.core.graphs import count_triangles, is_triangle_free
from extremal.types import DegreeSumCondition


def test_complete_bipartite():
    g = complete_bipartite(5, 8)
    assert g.edge_count == 40
    assert is_triangle_free(g)
    assert nx.is_isomorphic(to_networkx(g), nx.complete_bipartite_graph(5, 8))
    assert turan_bipartite(9) == complete_bipartite(4, 5)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_adjacent_extremal(k):
    for n in range(2 * k + 2, 30):
        g = adjacent_extremal(n, k)
        assert g.edge_count == adjacent_min_edges(n, k)
        assert count_triangles(g) == adjacent_min_triangles(n, k)
        assert satisfies_condition(g, DegreeSumCondition.adjacent(k))


def test_adjacent_extremal_on_ten_vertices():
    g = adjacent_extremal(10, 1)
    assert g.edge_count == 17
    assert count_triangles(g) == 8
    assert Counter(g.degrees()) == {9: 2, 2: 8}


@pytest.mark.parametrize("n", range(3, 41))
def test_nonadjacent_edge_extremal(n):
    g = nonadjacent_edge_extremal(n)
    assert g.edge_count == nonadjacent_min_edges(n)
    assert satisfies_condition(g, DegreeSumCondition.nonadjacent())
    if n % 2:
        assert count_triangles(g) == nonadjacent_min_triangles_odd(n)


def test_nonadjacent_edge_extremal_shapes():
    assert NonAdjacentEdgeExtremal(n=8).build().edge_count == 19
    assert count_triangles(nonadjacent_edge_extremal(4)) == 4  # K4
    assert Counter(nonadjacent_edge_extremal(7).degrees()) == {4: 7}


@pytest.mark.parametrize("n", range(4, 41, 2))
def test_even_triangle_light(n):
    g = even_triangle_light(n)
    assert count_triangles(g) == even_triangle_light_count(n)
    assert satisfies_condition(g, DegreeSumCondition.nonadjacent())
    assert sum(nx.triangles(to_networkx(g)).values()) // 3 == count_triangles(g)


def test_parameter_errors():
    with pytest.raises(ParameterError):
        adjacent_extremal(2, 1)
    with pytest.raises(ParameterError):
        nonadjacent_edge_extremal(2)
    with pytest.raises(ParameterError):
        even_triangle_light(7)
    with pytest.raises(ParameterError):
        complete_bipartite(40, 30)
    with pytest.raises(pydantic.ValidationError):
        CompleteBipartite(x=-1, y=3)


def test_audit_catches_wrong_degrees(monkeypatch):
    monkeypatch.setattr(TuranBipartite, "expected_degrees", lambda self: [0] * self.n)
    with pytest.raises(ConstructionAuditError):
        TuranBipartite(n=4).build()


def test_construction_specs_are_tagged():
    adapter = pydantic.TypeAdapter(ConstructionId)
    construction = adapter.validate_python({"type": "even_triangle_light", "n": 8})
    assert construction == EvenTriangleLight(n=8)
    assert adapter.validate_json(AdjacentExtremal(n=6, k=2).model_dump_json()) == AdjacentExtremal(
        n=6, k=2
    )
    assert str(AdjacentExtremal(n=6, k=2)) == "adjacent_extremal(n=6, k=2)"


def test_summary():
    summary = summarize(NonAdjacentEdgeExtremal(n=8))
    assert (summary.n, summary.edges) == (8, 19)
    assert summary.degrees == {4: 2, 5: 6}
    assert summary.nonadjacent_condition
    assert summary.adjacent_condition is None
    assert summarize(AdjacentExtremal(n=10, k=1)).adjacent_condition
