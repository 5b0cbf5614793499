from typing import Sequence

from extremal.core.exceptions import ParameterError
from extremal.core.graphs import row_connected
from extremal.types.condition import DegreeSumCondition
from extremal.types.graph import Graph, bits


def _check_offset(n: int, cond: DegreeSumCondition) -> None:
    if cond.offset < -n:
        raise ParameterError("offset", f"must be at least -n = {-n}, got {cond.offset}")


def violating_pairs(g: Graph, cond: DegreeSumCondition) -> list[tuple[int, int]]:
    """Pairs x < y in the condition's scope with d(x) + d(y) below n + offset

    Examples:
    >>> from extremal.core.graphs import graph_from_edges
    >>> path = graph_from_edges(3, [(0, 1), (1, 2)])
    >>> violating_pairs(path, DegreeSumCondition.nonadjacent())
    [(0, 2)]
    """
    _check_offset(g.n, cond)
    threshold = cond.threshold(g.n)
    degrees = g.degrees()
    pairs = []
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.has_edge(x, y) == (cond.scope == "adjacent"):
                if degrees[x] + degrees[y] < threshold:
                    pairs.append((x, y))
    return pairs


def row_satisfies(
    n: int, adj: Sequence[int], degrees: Sequence[int], cond: DegreeSumCondition
) -> bool:
    threshold = n + cond.offset
    everyone = (1 << n) - 1
    for x in range(n):
        later = everyone >> (x + 1) << (x + 1)
        scoped = adj[x] & later if cond.scope == "adjacent" else ~adj[x] & later
        need = threshold - degrees[x]
        for y in bits(scoped):
            if degrees[y] < need:
                return False
    if (cond.forbid_isolated or cond.require_connected) and n > 1 and 0 in degrees:
        return False
    if cond.require_connected and not row_connected(n, adj):
        return False
    return True


def satisfies_condition(g: Graph, cond: DegreeSumCondition) -> bool:
    """Whether g meets the degree-sum bound and the connectivity flags of cond

    Examples:
    >>> from extremal.core.graphs import complement
    >>> satisfies_condition(complement(Graph.empty(4)), DegreeSumCondition.nonadjacent())
    True
    >>> satisfies_condition(Graph.empty(4), DegreeSumCondition.nonadjacent())
    False
    """
    _check_offset(g.n, cond)
    return row_satisfies(g.n, g.adj, g.degrees(), cond)
