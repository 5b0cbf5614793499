import pytest

from extremal.core.conditions import row_satisfies
from extremal.core.exceptions import EnumerationTooLargeError, ParameterError
from extremal.core.graphs import count_triangles, is_connected, row_find_triangle
from extremal.core.search import DegreeSumPrune, SearchEngine, TriangleFreePrune
from extremal.types import DegreeSumCondition, DoubleStar

CONDITIONS = [
    DegreeSumCondition.nonadjacent(),
    DegreeSumCondition.nonadjacent(-2),
    DegreeSumCondition.adjacent(1),
    DegreeSumCondition.adjacent(2, connected=False),
    DegreeSumCondition(scope="adjacent", offset=0, forbid_isolated=True),
]


def _masks(engine, n, prune, keep=lambda state: True):
    masks = []

    def visit(state):
        if keep(state):
            masks.append(state.mask)

    engine.enumerate_graphs(n, prune, visit)
    return masks


def test_unpruned_enumeration_visits_every_mask_in_order(engine):
    masks = _masks(engine, 4, None)
    assert masks == list(range(64))


@pytest.mark.parametrize("n, expected", [(3, 7), (4, 41), (5, 388)])
def test_triangle_free_counts(engine, n, expected):
    pruned = _masks(engine, n, TriangleFreePrune())
    filtered = _masks(engine, n, None, lambda state: row_find_triangle(state.adj) is None)
    assert pruned == filtered
    assert len(pruned) == expected


@pytest.mark.parametrize("condition", CONDITIONS, ids=str)
def test_degree_sum_prune_keeps_every_satisfying_graph(engine, condition):
    n = 5

    def keep(state):
        return row_satisfies(n, state.adj, state.deg, condition)

    pruned = _masks(engine, n, DegreeSumPrune(n, condition), keep)
    filtered = _masks(engine, n, None, keep)
    assert pruned == filtered


def test_nonadjacent_minimum_edges_on_seven_vertices(engine):
    report = engine.min_edges_under_condition(7, DegreeSumCondition.nonadjacent())
    assert report.extremum == 14
    assert report.witnesses
    for witness in report.witnesses:
        assert witness.edge_count == 14


def test_nonadjacent_minimum_triangles(engine):
    assert engine.min_triangles_under_condition(5, DegreeSumCondition.nonadjacent()).extremum == 4
    report = engine.min_triangles_under_condition(7, DegreeSumCondition.nonadjacent())
    assert report.extremum == 6
    assert all(count_triangles(witness) == 6 for witness in report.witnesses)


def test_adjacent_minimum_edges(engine):
    report = engine.min_edges_under_condition(6, DegreeSumCondition.adjacent(1))
    assert report.extremum == 9
    assert all(is_connected(witness) for witness in report.witnesses)


def test_infeasible_condition_reports_none(engine):
    # d(x) + d(y) >= n + 3 cannot hold on an edge of a 3-vertex graph
    report = engine.min_edges_under_condition(3, DegreeSumCondition.adjacent(3, connected=True))
    assert report.extremum is None
    assert not report.feasible
    assert report.witnesses == []


def test_max_double_stars_matches_turan(engine):
    report = engine.max_double_stars_exhaustive(6, DoubleStar(1, 1))
    assert report.extremum == 36
    assert report.graphs_visited == report.graphs_satisfying


def test_witnesses_are_capped_and_ordered():
    engine = SearchEngine(workers=1, witness_cap=3, max_order=8)
    report = engine.search(5, "min_edges", condition=DegreeSumCondition.nonadjacent())
    masks = [witness.edge_mask() for witness in report.witnesses]
    assert len(masks) == 3
    assert masks == sorted(masks)


def test_result_does_not_depend_on_worker_count(engine):
    condition = DegreeSumCondition.nonadjacent()
    single = engine.search(6, "min_triangles", condition=condition)
    pooled = SearchEngine(workers=3, witness_cap=8, max_order=8).search(
        6, "min_triangles", condition=condition
    )
    assert single.model_dump_json() == pooled.model_dump_json()


def test_guards(engine):
    with pytest.raises(EnumerationTooLargeError):
        engine.search(9, "min_edges")
    with pytest.raises(ParameterError):
        engine.search(5, "max_double_stars")
    with pytest.raises(ParameterError):
        engine.search(5, "min_edges", condition=DegreeSumCondition.nonadjacent(-6))
    with pytest.raises(ParameterError):
        SearchEngine(witness_cap=-1)


def test_lovasz_simonovits_holds(engine):
    for n in range(2, 7):
        report = engine.verify_lovasz_simonovits(n)
        assert report.passed
        assert report.graphs_checked == 2 ** (n * (n - 1) // 2)
    # one edge added to K_{3,3} closes exactly three triangles
    assert engine.verify_lovasz_simonovits(6).tight[1] > 0


def test_double_star_audit(engine):
    for ds in (DoubleStar(1, 1), DoubleStar(1, 2)):
        audit = engine.audit_double_stars(6, ds)
        assert audit.passed, audit
        assert audit.report.graphs_visited == 5789
    assert engine.audit_double_stars(6, DoubleStar(1, 1)).report.extremum == 36


def test_low_degree_lemma(engine):
    for n in (4, 5, 6):
        for k in (1, 2):
            assert engine.verify_low_degree_lemma(n, k).passed
    with pytest.raises(ParameterError):
        engine.verify_low_degree_lemma(5, 0)


def test_partitions_are_fixed():
    assert SearchEngine.partitions(2) == [(0, 1), (1, 1)]
    assert len(SearchEngine.partitions(8)) == 256
