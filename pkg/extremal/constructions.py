from abc import ABC, abstractmethod
from collections import Counter
from typing import Annotated, Literal, Union

import pydantic
from loguru import logger

from extremal.core.conditions import satisfies_condition
from extremal.core.exceptions import ConstructionAuditError, ParameterError
from extremal.core.graphs import count_triangles
from extremal.types.condition import DegreeSumCondition
from extremal.types.graph import MAX_ORDER, Graph


class _Rows:
    """Mutable adjacency rows used while a construction is being assembled"""

    def __init__(self, n: int):
        self.n = n
        self.rows = [0] * n

    def add(self, u: int, v: int):
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u

    def remove(self, u: int, v: int):
        self.rows[u] &= ~(1 << v)
        self.rows[v] &= ~(1 << u)

    def clique(self, vertices: list[int]):
        for position, u in enumerate(vertices):
            for v in vertices[position + 1 :]:
                self.add(u, v)

    def join(self, left: list[int], right: list[int]):
        for u in left:
            for v in right:
                self.add(u, v)

    def freeze(self) -> Graph:
        return Graph(n=self.n, adj=tuple(self.rows))


def _check_order(n: int, minimum: int = 0):
    if not minimum <= n <= MAX_ORDER:
        raise ParameterError("n", f"must lie in {minimum}..{MAX_ORDER}, got {n}")


class Construction(pydantic.BaseModel, ABC):
    """Base model of an extremal graph construction

    Args:
        type: the kind of construction
    """

    model_config = pydantic.ConfigDict(frozen=True)

    type: Literal[
        "complete_bipartite",
        "turan_bipartite",
        "adjacent_extremal",
        "nonadjacent_edge_extremal",
        "even_triangle_light",
    ]

    @abstractmethod
    def _assemble(self) -> Graph:
        """Build the graph, parameters already checked"""

    @abstractmethod
    def check(self):
        """Raise ParameterError when the parameters are outside the construction's range"""

    def expected_degrees(self) -> list[int] | None:
        """Sorted degree sequence the construction must produce, None to skip the audit"""
        return None

    def build(self) -> Graph:
        self.check()
        graph = self._assemble()
        expected = self.expected_degrees()
        actual = sorted(graph.degrees())
        if expected is not None and actual != expected:
            raise ConstructionAuditError(str(self), Counter(expected), Counter(actual))
        logger.debug(f"Built {self} with {graph.edge_count} edges")
        return graph

    def __str__(self):
        parameters = ", ".join(f"{key}={value}" for key, value in self if key != "type")
        return f"{self.type}({parameters})"


class CompleteBipartite(Construction):
    """K_{x,y} with parts 0..x-1 and x..x+y-1

    Examples:
    >>> CompleteBipartite(x=3, y=4).build().edge_count
    12
    """

    type: Literal["complete_bipartite"] = "complete_bipartite"
    x: int = pydantic.Field(ge=0)
    y: int = pydantic.Field(ge=0)

    def check(self):
        if self.x + self.y > MAX_ORDER:
            raise ParameterError("x+y", f"at most {MAX_ORDER} vertices, got {self.x + self.y}")

    def expected_degrees(self) -> list[int]:
        return sorted([self.y] * self.x + [self.x] * self.y)

    def _assemble(self) -> Graph:
        rows = _Rows(self.x + self.y)
        rows.join(list(range(self.x)), list(range(self.x, self.x + self.y)))
        return rows.freeze()


class TuranBipartite(Construction):
    """The balanced complete bipartite graph K_{⌊n/2⌋,⌈n/2⌉}"""

    type: Literal["turan_bipartite"] = "turan_bipartite"
    n: int = pydantic.Field(ge=0)

    def check(self):
        _check_order(self.n)

    def _assemble(self) -> Graph:
        return CompleteBipartite(x=self.n // 2, y=self.n - self.n // 2).build()


class AdjacentExtremal(Construction):
    """A clique on 0..k with every other vertex joined to the whole clique

    Every edge uv has d(u) + d(v) >= n + k, and the graph attains the minimum number of edges
    and of triangles under that condition.
    """

    type: Literal["adjacent_extremal"] = "adjacent_extremal"
    n: int
    k: int

    def check(self):
        if self.k < 1:
            raise ParameterError("k", f"must be at least 1, got {self.k}")
        _check_order(self.n, self.k + 2)

    def expected_degrees(self) -> list[int]:
        return sorted([self.n - 1] * (self.k + 1) + [self.k + 1] * (self.n - self.k - 1))

    def _assemble(self) -> Graph:
        rows = _Rows(self.n)
        clique = list(range(self.k + 1))
        rows.clique(clique)
        rows.join(clique, list(range(self.k + 1, self.n)))
        return rows.freeze()


class NonAdjacentEdgeExtremal(Construction):
    """Fewest edges such that every non-adjacent pair x, y has d(x) + d(y) >= n + 1

    The shape depends on n mod 4, with k = ⌊(n+1)/4⌋:

    - n = 4k-1: K_{2k,2k-1} with a perfect matching inside the 2k-part
    - n = 4k+1: K_{2k,2k+1} with a matching on the first 2k vertices of the larger part, its last
      vertex joined to the first one
    - n = 4k+2: cliques on u_1..u_2k and v_1..v_2k+2, u_i joined to v_i and v_i+1 (to v_i and
      v_i+2 for the last two u), then the matching v_2v_3, ..., v_2k-2v_2k-1 removed
    - n = 4k: cliques on 2k-2 and 2k+2 vertices, u_i joined to v_i, v_i+1, v_i+2 cyclically, then
      the circulant with offsets ±1 and k-1 on the v's that received cross edges removed

    Examples:
    >>> NonAdjacentEdgeExtremal(n=8).build().edge_count
    19
    """

    type: Literal["nonadjacent_edge_extremal"] = "nonadjacent_edge_extremal"
    n: int

    def check(self):
        _check_order(self.n, 3)

    @property
    def k(self) -> int:
        return (self.n + 1) // 4

    def expected_degrees(self) -> list[int]:
        n, k = self.n, self.k
        match n % 4:
            case 3:
                return [2 * k] * n
            case 1:
                return [2 * k + 1] * (n - 1) + [2 * k + 2]
            case 2:
                return [2 * k + 1] * (2 * k) + [2 * k + 2] * (2 * k + 2)
            case _:
                if k == 1:
                    return [3] * 4
                return [2 * k] * (2 * k - 2) + [2 * k + 1] * (2 * k + 2)

    def _assemble(self) -> Graph:
        match self.n % 4:
            case 3:
                return self._odd_regular()
            case 1:
                return self._odd_semi_matching()
            case 2:
                return self._two_cliques_shifted()
            case _:
                return self._two_cliques_circulant()

    def _odd_regular(self) -> Graph:
        k = self.k
        rows = _Rows(self.n)
        big = list(range(2 * k))
        rows.join(big, list(range(2 * k, self.n)))
        for u in range(0, 2 * k, 2):
            rows.add(u, u + 1)
        return rows.freeze()

    def _odd_semi_matching(self) -> Graph:
        k = self.k
        rows = _Rows(self.n)
        big = list(range(2 * k, self.n))
        rows.join(list(range(2 * k)), big)
        for position in range(0, 2 * k, 2):
            rows.add(big[position], big[position + 1])
        rows.add(big[-1], big[0])
        return rows.freeze()

    def _two_cliques_shifted(self) -> Graph:
        k = (self.n - 2) // 4
        rows = _Rows(self.n)

        # 1-indexed u_i -> i-1 and v_j -> 2k+j-1
        def u(i: int) -> int:
            return i - 1

        def v(j: int) -> int:
            return 2 * k + j - 1

        rows.clique([u(i) for i in range(1, 2 * k + 1)])
        rows.clique([v(j) for j in range(1, 2 * k + 3)])
        for i in range(1, 2 * k - 1):
            rows.add(u(i), v(i))
            rows.add(u(i), v(i + 1))
        for i in (2 * k - 1, 2 * k):
            rows.add(u(i), v(i))
            rows.add(u(i), v(i + 2))
        for j in range(2, 2 * k - 1, 2):
            rows.remove(v(j), v(j + 1))
        return rows.freeze()

    def _two_cliques_circulant(self) -> Graph:
        k = self.n // 4
        if k == 1:
            rows = _Rows(4)
            rows.clique([0, 1, 2, 3])
            return rows.freeze()
        rows = _Rows(self.n)
        small = list(range(2 * k - 2))
        large = list(range(2 * k - 2, self.n))
        rows.clique(small)
        rows.clique(large)
        if k == 2:
            v = large
            for j in (0, 1, 2):
                rows.add(small[0], v[j])
            for j in (1, 2, 3):
                rows.add(small[1], v[j])
            for j in (0, 1, 2):
                rows.remove(v[j], v[j + 1])
            return rows.freeze()
        m = 2 * k - 2
        for i in range(m):
            for j in (0, 1, 2):
                rows.add(small[i], large[(i + j) % m])
        for t in range(m):
            rows.remove(large[t], large[(t + 1) % m])
        for t in range(m // 2):
            rows.remove(large[t], large[t + m // 2])
        return rows.freeze()


class EvenTriangleLight(Construction):
    """A near-balanced complete bipartite graph with few edges added inside the parts

    n = 4l: K_{2l,2l} with a perfect matching in each part (n²/4 triangles).
    n = 4l+2: K_{2l,2l+2} with a Hamiltonian cycle on the larger part (n²/4 - 1 triangles).
    Both are (n/2 + 1)-regular and satisfy the non-adjacent condition.
    """

    type: Literal["even_triangle_light"] = "even_triangle_light"
    n: int

    def check(self):
        if self.n % 2:
            raise ParameterError("n", f"must be even, got {self.n}")
        _check_order(self.n, 4)

    def expected_degrees(self) -> list[int]:
        return [self.n // 2 + 1] * self.n

    def _assemble(self) -> Graph:
        rows = _Rows(self.n)
        half = self.n // 4 * 2
        small = list(range(half))
        large = list(range(half, self.n))
        rows.join(small, large)
        if self.n % 4 == 0:
            for part in (small, large):
                for position in range(0, len(part), 2):
                    rows.add(part[position], part[position + 1])
        else:
            for position, vertex in enumerate(large):
                rows.add(vertex, large[(position + 1) % len(large)])
        return rows.freeze()


ConstructionId = Annotated[
    Union[
        CompleteBipartite,
        TuranBipartite,
        AdjacentExtremal,
        NonAdjacentEdgeExtremal,
        EvenTriangleLight,
    ],
    pydantic.Field(discriminator="type"),
]


class ConstructionSummary(pydantic.BaseModel):
    """Properties of a built construction, as printed by the CLI"""

    construction: str
    n: int
    edges: int
    triangles: int
    degrees: dict[int, int]
    nonadjacent_condition: bool
    adjacent_condition: bool | None = None


def summarize(construction: Construction, graph: Graph | None = None) -> ConstructionSummary:
    """
    Examples:
    >>> summarize(AdjacentExtremal(n=10, k=1)).degrees
    {2: 8, 9: 2}
    """
    graph = construction.build() if graph is None else graph
    adjacent = None
    if isinstance(construction, AdjacentExtremal):
        adjacent = satisfies_condition(graph, DegreeSumCondition.adjacent(construction.k))
    return ConstructionSummary(
        construction=str(construction),
        n=graph.n,
        edges=graph.edge_count,
        triangles=count_triangles(graph),
        degrees=dict(sorted(Counter(graph.degrees()).items())),
        nonadjacent_condition=satisfies_condition(graph, DegreeSumCondition.nonadjacent()),
        adjacent_condition=adjacent,
    )


def complete_bipartite(x: int, y: int) -> Graph:
    """Convenience function to build K_{x,y}

    Examples:
    >>> complete_bipartite(0, 5).edge_count
    0
    """
    return CompleteBipartite(x=x, y=y).build()


def turan_bipartite(n: int) -> Graph:
    """
    Examples:
    >>> turan_bipartite(7) == complete_bipartite(3, 4)
    True
    """
    return TuranBipartite(n=n).build()


def adjacent_extremal(n: int, k: int) -> Graph:
    return AdjacentExtremal(n=n, k=k).build()


def nonadjacent_edge_extremal(n: int) -> Graph:
    return NonAdjacentEdgeExtremal(n=n).build()


def even_triangle_light(n: int) -> Graph:
    """
    Examples:
    >>> from extremal.core.graphs import count_triangles
    >>> count_triangles(even_triangle_light(8)), count_triangles(even_triangle_light(10))
    (16, 24)
    """
    return EvenTriangleLight(n=n).build()
