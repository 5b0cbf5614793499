from functools import lru_cache
from itertools import combinations
from typing import Literal, Sequence

from scipy.special import comb

from extremal.core.exceptions import ParameterError, TriangleFoundError
from extremal.core.graphs import find_triangle
from extremal.types.double_star import DoubleStar
from extremal.types.graph import Graph, bits

CountMode = Literal["formula", "oracle", "auto"]


@lru_cache(maxsize=None)
def binom(x: int, r: int) -> int:
    """Exact binomial coefficient, zero whenever x < r or either argument is negative

    Examples:
    >>> binom(5, 2)
    10
    >>> binom(2, 3)
    0
    >>> binom(40, 20)
    137846528820
    """
    if r < 0 or x < r:
        return 0
    return int(comb(x, r, exact=True))


def stars_on_edge(du: int, dv: int, ds: DoubleStar) -> int:
    """Copies of ds whose central edge is a fixed edge uv of a triangle-free graph

    For a symmetric pattern a = b the two orientations give the same copy, so a single
    product is taken.

    Examples:
    >>> stars_on_edge(7, 6, DoubleStar(1, 3))
    160
    >>> stars_on_edge(2, 2, DoubleStar(1, 1))
    1
    """
    a, b = ds.a, ds.b
    if a == b:
        return binom(du - 1, a) * binom(dv - 1, a)
    return binom(du - 1, a) * binom(dv - 1, b) + binom(du - 1, b) * binom(dv - 1, a)


def row_double_stars(adj: Sequence[int], degrees: Sequence[int], ds: DoubleStar) -> int:
    """Edge-sum count on raw rows; the caller guarantees the graph is triangle-free"""
    total = 0
    for u, row in enumerate(adj):
        for offset in bits(row >> (u + 1)):
            total += stars_on_edge(degrees[u], degrees[u + 1 + offset], ds)
    return total


def count_double_stars_trianglefree(g: Graph, ds: DoubleStar) -> int:
    """Copies of ds in a triangle-free graph, summed edge by edge

    Examples:
    >>> from extremal.core.graphs import graph_from_edges
    >>> path = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    >>> count_double_stars_trianglefree(path, DoubleStar(1, 1))
    1
    """
    triangle = find_triangle(g)
    if triangle is not None:
        raise TriangleFoundError(triangle)
    return row_double_stars(g.adj, g.degrees(), ds)


def count_double_stars_oracle(g: Graph, ds: DoubleStar) -> int:
    """Copies of ds as subgraphs of any graph, by listing every leaf assignment

    Each ordered edge (u, v) is taken as the central edge with a leaves at u and b leaves at v,
    leaf sets disjoint. With a = b every copy appears once per orientation and the total is halved.
    """
    total = 0
    for u in range(g.n):
        for v in bits(g.adj[u]):
            near = list(bits(g.adj[u] & ~(1 << v)))
            far = g.adj[v] & ~(1 << u)
            for leaves in combinations(near, ds.a):
                taken = 0
                for leaf in leaves:
                    taken |= 1 << leaf
                total += sum(1 for _ in combinations(bits(far & ~taken), ds.b))
    if ds.is_symmetric:
        total //= 2
    return total


def count_double_stars_bipartite(n: int, x: int, ds: DoubleStar) -> int:
    """Copies of ds in K_{x, n-x}, evaluated without building the graph

    Examples:
    >>> count_double_stars_bipartite(13, 6, DoubleStar(1, 3))
    6720
    >>> count_double_stars_bipartite(10, 0, DoubleStar(1, 1))
    0
    """
    if not 0 <= x <= n:
        raise ParameterError("x", f"part size must lie in 0..{n}, got {x}")
    if x == 0 or x == n:
        return 0
    return x * (n - x) * stars_on_edge(x, n - x, ds)


def count_double_stars(g: Graph, ds: DoubleStar, mode: CountMode = "auto") -> tuple[int, CountMode]:
    """Count copies of ds, returning the count and the method actually used

    "auto" takes the edge-sum formula on triangle-free graphs and the oracle otherwise.

    Examples:
    >>> from extremal.core.graphs import complement
    >>> count_double_stars(complement(Graph.empty(4)), DoubleStar(1, 1))
    (12, 'oracle')
    """
    if mode == "oracle":
        return count_double_stars_oracle(g, ds), "oracle"
    if mode == "formula":
        return count_double_stars_trianglefree(g, ds), "formula"
    if find_triangle(g) is None:
        return row_double_stars(g.adj, g.degrees(), ds), "formula"
    return count_double_stars_oracle(g, ds), "oracle"
