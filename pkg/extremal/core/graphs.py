"""Graph construction and the basic predicates every other module builds on

The row-level helpers take the adjacency bitsets directly so that the enumeration engine can
call them on millions of candidate graphs without building a model for each one.
"""

from typing import Iterable, Sequence

from extremal.core.exceptions import InvalidEdgeError, InvalidVertexError, ParameterError
from extremal.types.graph import MAX_ORDER, Graph, bits


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from a list of unordered pairs; repeated pairs collapse to one edge

    Examples:
    >>> graph_from_edges(4, [(0, 1), (0, 1), (1, 2)]).edge_count
    2
    >>> graph_from_edges(3, [])
    Graph(n=3, adj=(0, 0, 0))
    """
    if not 0 <= n <= MAX_ORDER:
        raise ParameterError("n", f"graphs have between 0 and {MAX_ORDER} vertices, got {n}")
    rows = [0] * n
    for u, v in edges:
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise InvalidVertexError(vertex, n)
        if u == v:
            raise InvalidEdgeError(u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph.model_construct(n=n, adj=tuple(rows))


def degree(g: Graph, v: int) -> int:
    """
    Examples:
    >>> degree(graph_from_edges(3, [(0, 1), (0, 2)]), 0)
    2
    """
    if not 0 <= v < g.n:
        raise InvalidVertexError(v, g.n)
    return g.adj[v].bit_count()


def row_triangles(adj: Sequence[int]) -> int:
    total = 0
    for u, row in enumerate(adj):
        for v in bits(row >> (u + 1)):
            total += (row & adj[u + 1 + v]).bit_count()
    return total // 3


def row_find_triangle(adj: Sequence[int]) -> tuple[int, int, int] | None:
    for u, row in enumerate(adj):
        for v in bits(row >> (u + 1)):
            v += u + 1
            common = row & adj[v] & ~((1 << (v + 1)) - 1)
            if common:
                return u, v, (common & -common).bit_length() - 1
    return None


def row_connected(n: int, adj: Sequence[int]) -> bool:
    if n <= 1:
        return True
    everyone = (1 << n) - 1
    reached = frontier = 1
    while frontier:
        grown = 0
        for v in bits(frontier):
            grown |= adj[v]
        frontier = grown & ~reached
        reached |= grown
    return reached == everyone


def count_triangles(g: Graph) -> int:
    """Number of triangles, Σ over edges uv of |N(u) ∩ N(v)| divided by 3

    Examples:
    >>> count_triangles(complement(Graph.empty(5)))
    10
    """
    return row_triangles(g.adj)


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    """The lexicographically first triangle u < v < w, or None"""
    return row_find_triangle(g.adj)


def is_triangle_free(g: Graph) -> bool:
    return row_find_triangle(g.adj) is None


def is_connected(g: Graph) -> bool:
    """
    Examples:
    >>> is_connected(graph_from_edges(4, [(0, 1), (2, 3)]))
    False
    >>> is_connected(Graph.empty(1))
    True
    """
    return row_connected(g.n, g.adj)


def complement(g: Graph) -> Graph:
    """
    Examples:
    >>> complement(Graph.empty(3)).edge_count
    3
    """
    everyone = (1 << g.n) - 1
    return Graph.model_construct(
        n=g.n, adj=tuple(everyone & ~row & ~(1 << v) for v, row in enumerate(g.adj))
    )
