import networkx as nx
import pytest

from extremal.core.graph6 import from_networkx
from extremal.core.graphs import graph_from_edges
from extremal.core.search import SearchEngine


@pytest.fixture()
def engine():
    return SearchEngine(workers=1, witness_cap=8, max_order=8, progress=False)


@pytest.fixture()
def path4():
    return graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture()
def k4():
    return graph_from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


@pytest.fixture()
def petersen():
    return from_networkx(nx.petersen_graph())
