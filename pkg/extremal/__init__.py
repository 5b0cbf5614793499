from extremal.core.search import SearchEngine
from extremal.core.counting import count_double_stars, count_double_stars_bipartite
from extremal.core.graph6 import parse_graph6, write_graph6
from extremal.core.verification import run_suite, run_all
from extremal.types import DoubleStar, DegreeSumCondition, Graph
from extremal import types
from extremal import constructions

__all__ = [
    "SearchEngine",
    "count_double_stars",
    "count_double_stars_bipartite",
    "parse_graph6",
    "write_graph6",
    "run_suite",
    "run_all",
    "DoubleStar",
    "DegreeSumCondition",
    "Graph",
    "types",
    "constructions",
]
